#pragma once

#include "perfgrp/group.hpp"
#include "perfgrp/numbers.hpp"

#include <functional>
#include <span>
#include <vector>

namespace perfgrp {

// Every normal subgroup of `group`, sorted by (order, element list).
struct NormalLattice {
  Group group;
  std::vector<Subgroup> members;

  std::size_t size() const noexcept { return members.size(); }
};

// D(G) = sum of |N| over normal N, and whether it equals 2|G|.
struct DResult {
  BigInt d_value;
  BigInt order;
  Rational ratio;
  bool is_perfect = false;
};

struct PrimeIndexCount {
  std::size_t count = 0;  // normal subgroups of index p
  std::size_t rank = 0;   // p-rank r of the abelianization
};

Subgroup normal_closure(const Group& g, std::span<const Element> seed);

// Fixpoint of joins with the normal closures of the conjugacy classes,
// starting from the trivial subgroup.
NormalLattice normal_subgroups(const Group& g);

DResult d_group(const NormalLattice& lattice);
DResult d_group(const Group& g);

// Number of normal subgroups containing x.
std::size_t nu(const NormalLattice& lattice, Element x);
std::size_t nu(const Group& g, Element x);

// Elements contained in no proper normal subgroup.
std::vector<Element> normal_generators(const NormalLattice& lattice);
std::vector<Element> normal_generators(const Group& g);

// Throws DomainError for non-prime p.
PrimeIndexCount prime_index_count(const NormalLattice& lattice, const AbelianStructure& ab, std::uint64_t p);
PrimeIndexCount prime_index_count(const Group& g, std::uint64_t p);

// At most one normal subgroup of index p, for every prime p.
bool is_tight(const NormalLattice& lattice);
bool is_tight(const Group& g);

using SubgroupFunction = std::function<BigInt(const Subgroup&)>;

// Sum of f(N) over the normal subgroups N.
BigInt lifted_sum(const NormalLattice& lattice, const SubgroupFunction& f);
BigInt lifted_sum(const Group& g, const SubgroupFunction& f);

}  // namespace perfgrp
