#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace perfgrp {

using Element = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 5000;

struct Limits {
  // Largest group that may be realized as a multiplication table.
  std::size_t max_order = kDefaultMaxOrder;
  // Associativity is checked on every triple up to this order and on
  // order^2 pseudo-random triples (fixed seed) above it.
  std::size_t exhaustive_associativity_bound = 512;
};

// A finite group given by its full multiplication table. Immutable; copies
// share the underlying table.
class Group {
 public:
  // `table` is row-major: table[a * order + b] = a * b. Throws DomainError
  // unless the table has an identity, inverses, and is associative.
  Group(std::size_t order, std::vector<Element> table, std::string label, const Limits& limits = {});

  std::size_t order() const noexcept { return data_->order; }
  Element mul(Element a, Element b) const noexcept { return data_->table[a * data_->order + b]; }
  Element identity() const noexcept { return data_->identity; }
  Element inverse(Element a) const noexcept { return data_->inverse[a]; }
  const std::string& label() const noexcept { return data_->label; }
  std::span<const Element> table() const noexcept { return data_->table; }

  bool is_abelian() const;
  bool is_trivial() const noexcept { return order() == 1; }

  // Same group, different label.
  Group relabeled(std::string label) const;

  // True iff both handles refer to the same realized table.
  bool same_as(const Group& other) const noexcept { return data_ == other.data_; }

 private:
  struct Data {
    std::size_t order;
    std::vector<Element> table;
    Element identity;
    std::vector<Element> inverse;
    std::string label;
  };
  explicit Group(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

class Subgroup;

namespace detail {
// Skips the closure and normality checks; callers guarantee both.
Subgroup make_subgroup_unchecked(Group parent, std::vector<Element> sorted, bool is_normal);
}  // namespace detail

// A subgroup of a realized group, as a strictly increasing list of element
// indices. Normality is computed once at construction.
class Subgroup {
 public:
  // Accepts any order of `elements` (duplicates are rejected). Throws
  // DomainError if the set is not a subgroup of `parent`.
  Subgroup(Group parent, std::vector<Element> elements);

  static Subgroup trivial(const Group& g);
  static Subgroup whole(const Group& g);

  const Group& parent() const noexcept { return parent_; }
  std::span<const Element> elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t index() const noexcept { return parent_.order() / elements_.size(); }
  bool is_normal() const noexcept { return is_normal_; }
  bool contains(Element x) const;
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_whole() const noexcept { return elements_.size() == parent_.order(); }

  // Element-set equality within the same parent.
  bool operator==(const Subgroup& other) const {
    return parent_.same_as(other.parent_) && elements_ == other.elements_;
  }

 private:
  Subgroup(Group parent, std::vector<Element> sorted, bool is_normal)
      : parent_(std::move(parent)), elements_(std::move(sorted)), is_normal_(is_normal) {}
  friend Subgroup detail::make_subgroup_unchecked(Group, std::vector<Element>, bool);

  Group parent_;
  std::vector<Element> elements_;
  bool is_normal_;
};

// Surjective homomorphism source -> target; image[x] is the target element.
struct QuotientMap {
  Group source;
  Group target;
  std::vector<Element> image;

  Subgroup kernel() const;
  // Full preimage of a subgroup of the target.
  Subgroup preimage(const Subgroup& in_target) const;
};

// Invariant factors d1 | d2 | ... | dk, each >= 2; empty for the trivial group.
struct AbelianStructure {
  std::vector<std::uint64_t> invariant_factors;

  bool is_cyclic() const noexcept { return invariant_factors.size() <= 1; }
  // Number of invariant factors divisible by p.
  std::size_t p_rank(std::uint64_t p) const;
  std::uint64_t order() const;
};

struct Abelianization {
  QuotientMap map;  // G -> G / [G, G]
  AbelianStructure structure;

  const Group& group() const noexcept { return map.target; }
  bool is_cyclic() const noexcept { return structure.is_cyclic(); }
};

// Image of i is perm[i]. Product convention: (p * q)(i) = p(q(i)).
using Permutation = std::vector<std::uint32_t>;

// Builds a permutation of `degree` points from disjoint cycles,
// e.g. from_cycles(4, {{0, 1, 2, 3}}).
Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);

// ---- constructors ----------------------------------------------------------

Group cyclic(std::size_t n, const Limits& limits = {});
// Dihedral group of ORDER m (m even): rotations are elements 0..m/2-1,
// reflections m/2..m-1.
Group dihedral(std::size_t m, const Limits& limits = {});
Group symmetric(std::size_t n, const Limits& limits = {});
Group alternating(std::size_t n, const Limits& limits = {});
// Element (a, b) has index a * |g2| + b.
Group direct_product(const Group& g1, const Group& g2, const Limits& limits = {});
// The canonical copies G1 x 1 and 1 x G2 inside a direct_product result.
std::pair<Subgroup, Subgroup> product_embeddings(const Group& product, std::size_t first_order,
                                                 std::size_t second_order);

// Enumerates <gens> by breadth-first search from the identity, trying
// generators in the given order; that BFS order is the element numbering.
Group from_generators(std::size_t degree, const std::vector<Permutation>& gens, std::string label = {},
                      const Limits& limits = {});

// Quotient by a normal subgroup. Cosets are numbered by ascending minimum
// element index.
QuotientMap quotient(const Group& g, const Subgroup& n);

// Re-realizes a subgroup as a standalone group, numbering its elements in
// ascending parent-index order.
Group as_group(const Subgroup& h);

// ---- structure -------------------------------------------------------------

Subgroup subgroup_generated(const Group& g, std::span<const Element> seed);
std::vector<std::vector<Element>> conjugacy_classes(const Group& g);
Subgroup commutator_subgroup(const Group& g);
// Throws DomainError if `g` is not abelian.
AbelianStructure abelian_invariants(const Group& g);
Abelianization abelianization(const Group& g);
std::size_t element_order(const Group& g, Element x);

}  // namespace perfgrp
