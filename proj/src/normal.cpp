#include "perfgrp/normal.hpp"

#include "perfgrp/errors.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <set>

namespace perfgrp {

namespace {

using Bits = boost::dynamic_bitset<>;

Bits to_bits(std::size_t n, std::span<const Element> elems) {
  Bits b(n);
  for (Element x : elems) b.set(x);
  return b;
}

std::vector<Element> to_elements(const Bits& b) {
  std::vector<Element> out;
  out.reserve(b.count());
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(static_cast<Element>(i));
  return out;
}

}  // namespace

Subgroup normal_closure(const Group& g, std::span<const Element> seed) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> conjugates;
  for (Element s : seed) {
    if (s >= g.order()) throw DomainError("normal_closure: element index out of range");
    for (Element x = 0; x < g.order(); ++x) {
      Element c = g.mul(g.mul(x, s), g.inverse(x));
      if (!seen[c]) {
        seen[c] = true;
        conjugates.push_back(c);
      }
    }
  }
  return subgroup_generated(g, conjugates);
}

NormalLattice normal_subgroups(const Group& g) {
  const std::size_t n = g.order();

  std::set<Bits> class_closures;
  for (const auto& cls : conjugacy_classes(g)) {
    const Element rep[] = {cls.front()};
    class_closures.insert(to_bits(n, normal_closure(g, rep).elements()));
  }
  std::vector<std::pair<Bits, std::vector<Element>>> closures;
  for (const auto& b : class_closures) closures.emplace_back(b, to_elements(b));

  const Element id[] = {g.identity()};
  std::set<Bits> found{to_bits(n, id)};
  std::vector<Bits> worklist(found.begin(), found.end());
  while (!worklist.empty()) {
    Bits m = std::move(worklist.back());
    worklist.pop_back();
    const std::vector<Element> m_elems = to_elements(m);
    for (const auto& [k_bits, k_elems] : closures) {
      if (k_bits.is_subset_of(m)) continue;
      // MK is the join of two normal subgroups.
      Bits join(n);
      for (Element a : m_elems)
        for (Element b : k_elems) join.set(g.mul(a, b));
      if (found.insert(join).second) worklist.push_back(std::move(join));
    }
  }

  std::vector<std::vector<Element>> sorted;
  sorted.reserve(found.size());
  for (const auto& b : found) sorted.push_back(to_elements(b));
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  NormalLattice lattice{g, {}};
  lattice.members.reserve(sorted.size());
  for (auto& elems : sorted) lattice.members.push_back(detail::make_subgroup_unchecked(g, std::move(elems), true));
  return lattice;
}

DResult d_group(const NormalLattice& lattice) {
  BigInt d = 0;
  for (const auto& member : lattice.members) d += member.order();
  BigInt order = lattice.group.order();
  Rational ratio(d, order);
  const bool perfect = d == 2 * order;
  return DResult{std::move(d), std::move(order), std::move(ratio), perfect};
}

DResult d_group(const Group& g) { return d_group(normal_subgroups(g)); }

std::size_t nu(const NormalLattice& lattice, Element x) {
  if (x >= lattice.group.order()) throw DomainError("nu: element index out of range");
  return static_cast<std::size_t>(std::count_if(lattice.members.begin(), lattice.members.end(),
                                                [x](const Subgroup& s) { return s.contains(x); }));
}

std::size_t nu(const Group& g, Element x) { return nu(normal_subgroups(g), x); }

std::vector<Element> normal_generators(const NormalLattice& lattice) {
  std::vector<Element> out;
  for (Element x = 0; x < lattice.group.order(); ++x) {
    if (nu(lattice, x) == 1) out.push_back(x);
  }
  return out;
}

std::vector<Element> normal_generators(const Group& g) { return normal_generators(normal_subgroups(g)); }

PrimeIndexCount prime_index_count(const NormalLattice& lattice, const AbelianStructure& ab, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("prime_index_count: " + std::to_string(p) + " is not prime");
  PrimeIndexCount result;
  for (const auto& member : lattice.members) {
    if (member.index() == p) ++result.count;
  }
  result.rank = ab.p_rank(p);
  return result;
}

PrimeIndexCount prime_index_count(const Group& g, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("prime_index_count: " + std::to_string(p) + " is not prime");
  return prime_index_count(normal_subgroups(g), abelianization(g).structure, p);
}

bool is_tight(const NormalLattice& lattice) {
  for (const auto& [p, e] : factorize(BigInt(lattice.group.order()))) {
    auto count = std::count_if(lattice.members.begin(), lattice.members.end(),
                               [p = p](const Subgroup& s) { return s.index() == p; });
    if (count > 1) return false;
  }
  return true;
}

bool is_tight(const Group& g) { return is_tight(normal_subgroups(g)); }

BigInt lifted_sum(const NormalLattice& lattice, const SubgroupFunction& f) {
  BigInt total = 0;
  for (const auto& member : lattice.members) total += f(member);
  return total;
}

BigInt lifted_sum(const Group& g, const SubgroupFunction& f) { return lifted_sum(normal_subgroups(g), f); }

}  // namespace perfgrp
