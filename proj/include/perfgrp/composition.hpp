#pragma once

#include "perfgrp/group.hpp"
#include "perfgrp/numbers.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>

namespace perfgrp {

// Smallest order shared by two non-isomorphic simple groups (A8 and
// PSL(3,4)). Below it a nonabelian simple group is determined by its order.
inline constexpr std::uint64_t kSimpleOrderAmbiguity = 20160;

struct FactorLabel {
  enum class Kind { CyclicPrime, NonabelianSimple };

  Kind kind;
  std::uint64_t parameter;  // p for C_p, the group order otherwise

  static FactorLabel cyclic_prime(std::uint64_t p);
  // Throws DomainError at or above kSimpleOrderAmbiguity.
  static FactorLabel nonabelian_simple(std::uint64_t order);
  // Label of a simple group known only by its order.
  static FactorLabel simple_of_order(std::uint64_t order);

  std::uint64_t size() const noexcept { return parameter; }
  bool is_cyclic() const noexcept { return kind == Kind::CyclicPrime; }
  // "C2", "simple(60)"
  std::string to_string() const;

  auto operator<=>(const FactorLabel&) const = default;
};

// Composition factors counted with multiplicity.
class FactorMultiset {
 public:
  FactorMultiset() = default;

  void add(const FactorLabel& label, unsigned multiplicity = 1);
  FactorMultiset operator+(const FactorMultiset& rhs) const;
  bool operator==(const FactorMultiset&) const = default;

  const std::map<FactorLabel, unsigned>& counts() const noexcept { return counts_; }
  std::set<FactorLabel> labels() const;
  bool empty() const noexcept { return counts_.empty(); }
  // Product of size^multiplicity; equals the order of the group.
  BigInt order() const;
  std::string to_string() const;

 private:
  std::map<FactorLabel, unsigned> counts_;
};

enum class SeriesChoice { First, Last };

bool is_simple(const Group& g);

// c(G) = c(G/N) + c(N) for the first (or last) proper nontrivial normal N.
FactorMultiset composition_factors(const Group& g, SeriesChoice choice = SeriesChoice::First);

bool coprime(const FactorMultiset& a, const FactorMultiset& b);
bool coprime(const Group& g1, const Group& g2);

}  // namespace perfgrp
