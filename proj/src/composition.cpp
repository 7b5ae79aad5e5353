#include "perfgrp/composition.hpp"

#include "perfgrp/errors.hpp"
#include "perfgrp/normal.hpp"

#include <algorithm>

namespace perfgrp {

FactorLabel FactorLabel::cyclic_prime(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("cyclic factor label needs a prime, got " + std::to_string(p));
  return FactorLabel{Kind::CyclicPrime, p};
}

FactorLabel FactorLabel::nonabelian_simple(std::uint64_t order) {
  if (order < 60 || is_prime(order)) {
    throw DomainError("no nonabelian simple group has order " + std::to_string(order));
  }
  if (order >= kSimpleOrderAmbiguity) {
    throw DomainError("simple group of order " + std::to_string(order) +
                      " is not determined by its order (ambiguous from " + std::to_string(kSimpleOrderAmbiguity) + ")");
  }
  return FactorLabel{Kind::NonabelianSimple, order};
}

FactorLabel FactorLabel::simple_of_order(std::uint64_t order) {
  return is_prime(order) ? cyclic_prime(order) : nonabelian_simple(order);
}

std::string FactorLabel::to_string() const {
  return kind == Kind::CyclicPrime ? "C" + std::to_string(parameter) : "simple(" + std::to_string(parameter) + ")";
}

void FactorMultiset::add(const FactorLabel& label, unsigned multiplicity) {
  if (multiplicity > 0) counts_[label] += multiplicity;
}

FactorMultiset FactorMultiset::operator+(const FactorMultiset& rhs) const {
  FactorMultiset sum = *this;
  for (const auto& [label, k] : rhs.counts_) sum.add(label, k);
  return sum;
}

std::set<FactorLabel> FactorMultiset::labels() const {
  std::set<FactorLabel> out;
  for (const auto& entry : counts_) out.insert(entry.first);
  return out;
}

BigInt FactorMultiset::order() const {
  BigInt n = 1;
  for (const auto& [label, k] : counts_) n *= boost::multiprecision::pow(BigInt(label.size()), k);
  return n;
}

std::string FactorMultiset::to_string() const {
  std::string s = "{";
  for (const auto& [label, k] : counts_) {
    if (s.size() > 1) s += ", ";
    s += label.to_string() + ":" + std::to_string(k);
  }
  return s + "}";
}

bool is_simple(const Group& g) { return normal_subgroups(g).size() == 2; }

FactorMultiset composition_factors(const Group& g, SeriesChoice choice) {
  FactorMultiset out;
  if (g.is_trivial()) return out;
  const NormalLattice lattice = normal_subgroups(g);
  if (lattice.size() == 2) {
    out.add(FactorLabel::simple_of_order(g.order()));
    return out;
  }
  // members[0] is trivial and members.back() is G.
  const Subgroup& n = choice == SeriesChoice::First ? lattice.members[1] : lattice.members[lattice.size() - 2];
  return composition_factors(quotient(g, n).target, choice) + composition_factors(as_group(n), choice);
}

bool coprime(const FactorMultiset& a, const FactorMultiset& b) {
  for (const auto& entry : a.counts()) {
    if (b.counts().contains(entry.first)) return false;
  }
  return true;
}

bool coprime(const Group& g1, const Group& g2) { return coprime(composition_factors(g1), composition_factors(g2)); }

}  // namespace perfgrp
