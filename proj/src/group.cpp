#include "perfgrp/group.hpp"

#include "perfgrp/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

namespace perfgrp {

namespace {

constexpr Element kUnset = static_cast<Element>(-1);

void check_order_bound(std::size_t order, const Limits& limits, const std::string& what) {
  if (order > limits.max_order) {
    throw ResourceError(what + ": order " + std::to_string(order) + " exceeds the realization bound max_order=" +
                        std::to_string(limits.max_order));
  }
}

// n! (or n!/2), clamped once it passes the bound so it cannot overflow.
std::size_t bounded_factorial(std::size_t n, std::size_t divide_by, std::size_t bound) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    f *= k;
    if (f / divide_by > bound) return bound + 1;
  }
  return f / divide_by;
}

void check_element(const Group& g, Element x) {
  if (x >= g.order()) {
    throw DomainError("element index " + std::to_string(x) + " out of range for group of order " +
                      std::to_string(g.order()));
  }
}

}  // namespace

// ---------------------------------------------------------------- Group

Group::Group(std::size_t order, std::vector<Element> table, std::string label, const Limits& limits) {
  if (order == 0) throw DomainError("group order must be positive");
  if (table.size() != order * order) throw DomainError("table size does not match order^2");
  for (Element v : table) {
    if (v >= order) throw DomainError("table entry out of range");
  }
  auto at = [&](std::size_t a, std::size_t b) { return table[a * order + b]; };

  // e * 0 = 0 pins down the only possible identity.
  Element identity = kUnset;
  for (std::size_t e = 0; e < order; ++e) {
    if (at(e, 0) == 0) {
      identity = static_cast<Element>(e);
      break;
    }
  }
  if (identity == kUnset) throw DomainError("table has no identity");
  for (std::size_t g = 0; g < order; ++g) {
    if (at(identity, g) != g || at(g, identity) != g) throw DomainError("table has no two-sided identity");
  }

  std::vector<Element> inverse(order, kUnset);
  for (std::size_t g = 0; g < order; ++g) {
    for (std::size_t h = 0; h < order; ++h) {
      if (at(g, h) == identity) {
        inverse[g] = static_cast<Element>(h);
        break;
      }
    }
    if (inverse[g] == kUnset || at(inverse[g], g) != identity) {
      throw DomainError("element " + std::to_string(g) + " has no two-sided inverse");
    }
  }

  auto associative = [&](std::size_t a, std::size_t b, std::size_t c) {
    return at(at(a, b), c) == at(a, at(b, c));
  };
  if (order <= limits.exhaustive_associativity_bound) {
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        for (std::size_t c = 0; c < order; ++c)
          if (!associative(a, b, c)) throw DomainError("table is not associative");
  } else {
    // One 64-bit draw yields three 21-bit lanes, each scaled onto [0, order).
    // The bias is negligible for a tripwire and the order bound keeps
    // order * 2^21 well inside 64 bits.
    std::mt19937_64 rng(0x5eed0fa550c1a7e5ULL);
    constexpr std::uint64_t kLane = (std::uint64_t{1} << 21) - 1;
    for (std::size_t i = 0; i < order * order; ++i) {
      const std::uint64_t r = rng();
      const std::size_t a = ((r & kLane) * order) >> 21;
      const std::size_t b = (((r >> 21) & kLane) * order) >> 21;
      const std::size_t c = (((r >> 42) & kLane) * order) >> 21;
      if (!associative(a, b, c)) throw DomainError("table is not associative");
    }
  }

  data_ = std::make_shared<const Data>(Data{order, std::move(table), identity, std::move(inverse), std::move(label)});
}

bool Group::is_abelian() const {
  const std::size_t n = order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (data_->table[a * n + b] != data_->table[b * n + a]) return false;
  return true;
}

Group Group::relabeled(std::string label) const {
  Data copy = *data_;
  copy.label = std::move(label);
  return Group(std::make_shared<const Data>(std::move(copy)));
}

// ---------------------------------------------------------------- Subgroup

namespace detail {
Subgroup make_subgroup_unchecked(Group parent, std::vector<Element> sorted, bool is_normal) {
  return Subgroup(std::move(parent), std::move(sorted), is_normal);
}
}  // namespace detail

Subgroup::Subgroup(Group parent, std::vector<Element> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)), is_normal_(false) {
  const std::size_t n = parent_.order();
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw DomainError("subgroup element list has duplicates");
  }
  std::vector<bool> member(n, false);
  for (Element x : elements_) {
    if (x >= n) throw DomainError("subgroup element out of range");
    member[x] = true;
  }
  if (elements_.empty() || !member[parent_.identity()]) throw DomainError("subgroup must contain the identity");
  for (Element a : elements_) {
    if (!member[parent_.inverse(a)]) throw DomainError("subset is not closed under inverses");
    for (Element b : elements_) {
      if (!member[parent_.mul(a, b)]) throw DomainError("subset is not closed under the product");
    }
  }
  if (n % elements_.size() != 0) throw DomainError("subgroup order does not divide group order");
  is_normal_ = true;
  for (Element g = 0; g < n && is_normal_; ++g) {
    for (Element h : elements_) {
      if (!member[parent_.mul(parent_.mul(g, h), parent_.inverse(g))]) {
        is_normal_ = false;
        break;
      }
    }
  }
}

Subgroup Subgroup::trivial(const Group& g) { return Subgroup(g, {g.identity()}, true); }

Subgroup Subgroup::whole(const Group& g) {
  std::vector<Element> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Element>(i);
  return Subgroup(g, std::move(all), true);
}

bool Subgroup::contains(Element x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

// ---------------------------------------------------------------- QuotientMap

Subgroup QuotientMap::kernel() const {
  std::vector<Element> k;
  for (std::size_t x = 0; x < image.size(); ++x) {
    if (image[x] == target.identity()) k.push_back(static_cast<Element>(x));
  }
  return detail::make_subgroup_unchecked(source, std::move(k), true);
}

Subgroup QuotientMap::preimage(const Subgroup& in_target) const {
  if (!in_target.parent().same_as(target)) throw DomainError("preimage: subgroup is not in the quotient");
  std::vector<Element> pre;
  for (std::size_t x = 0; x < image.size(); ++x) {
    if (in_target.contains(image[x])) pre.push_back(static_cast<Element>(x));
  }
  return detail::make_subgroup_unchecked(source, std::move(pre), in_target.is_normal());
}

// ---------------------------------------------------------------- AbelianStructure

std::size_t AbelianStructure::p_rank(std::uint64_t p) const {
  return static_cast<std::size_t>(
      std::count_if(invariant_factors.begin(), invariant_factors.end(), [p](std::uint64_t d) { return d % p == 0; }));
}

std::uint64_t AbelianStructure::order() const {
  std::uint64_t n = 1;
  for (auto d : invariant_factors) n *= d;
  return n;
}

// ---------------------------------------------------------------- constructors

Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  std::vector<bool> seen(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree || seen[c[i]]) throw DomainError("cycles must be disjoint and within the degree");
      seen[c[i]] = true;
      p[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return p;
}

Group cyclic(std::size_t n, const Limits& limits) {
  if (n == 0) throw DomainError("cyclic: order must be >= 1");
  check_order_bound(n, limits, "cyclic");
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>((i + j) % n);
  return Group(n, std::move(table), "C" + std::to_string(n), limits);
}

Group dihedral(std::size_t m, const Limits& limits) {
  if (m == 0 || m % 2 != 0) throw DomainError("dihedral: order must be a positive even integer, got " + std::to_string(m));
  check_order_bound(m, limits, "dihedral");
  const std::size_t n = m / 2;
  // r^a -> a, s r^a -> n + a, with r s = s r^-1.
  std::vector<Element> table(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const bool xs = x >= n;
      const bool ys = y >= n;
      const std::size_t a = x % n;
      const std::size_t b = y % n;
      std::size_t result;
      if (!xs && !ys) {
        result = (a + b) % n;
      } else if (!xs && ys) {
        result = n + (b + n - a) % n;
      } else if (xs && !ys) {
        result = n + (a + b) % n;
      } else {
        result = (b + n - a) % n;
      }
      table[x * m + y] = static_cast<Element>(result);
    }
  }
  return Group(m, std::move(table), "D" + std::to_string(m), limits);
}

Group symmetric(std::size_t n, const Limits& limits) {
  if (n == 0) throw DomainError("symmetric: degree must be >= 1");
  check_order_bound(bounded_factorial(n, 1, limits.max_order), limits, "symmetric");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(from_cycles(n, {{0, 1}}));
  if (n >= 3) {
    std::vector<std::uint32_t> full(n);
    for (std::size_t i = 0; i < n; ++i) full[i] = static_cast<std::uint32_t>(i);
    gens.push_back(from_cycles(n, {full}));
  }
  return from_generators(n, gens, "S" + std::to_string(n), limits);
}

Group alternating(std::size_t n, const Limits& limits) {
  if (n == 0) throw DomainError("alternating: degree must be >= 1");
  check_order_bound(n < 2 ? 1 : bounded_factorial(n, 2, limits.max_order), limits, "alternating");
  std::vector<Permutation> gens;
  for (std::uint32_t k = 2; k < n; ++k) gens.push_back(from_cycles(n, {{0, 1, k}}));
  return from_generators(n, gens, "A" + std::to_string(n), limits);
}

Group direct_product(const Group& g1, const Group& g2, const Limits& limits) {
  const std::size_t n1 = g1.order();
  const std::size_t n2 = g2.order();
  if (n1 > limits.max_order / n2) {
    throw ResourceError("direct_product: order " + std::to_string(n1) + " * " + std::to_string(n2) +
                        " exceeds the realization bound max_order=" + std::to_string(limits.max_order));
  }
  const std::size_t n = n1 * n2;
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n2; ++b)
      for (std::size_t c = 0; c < n1; ++c)
        for (std::size_t d = 0; d < n2; ++d)
          table[(a * n2 + b) * n + (c * n2 + d)] = static_cast<Element>(g1.mul(a, c) * n2 + g2.mul(b, d));
  return Group(n, std::move(table), g1.label() + " x " + g2.label(), limits);
}

std::pair<Subgroup, Subgroup> product_embeddings(const Group& product, std::size_t first_order,
                                                 std::size_t second_order) {
  if (first_order * second_order != product.order()) {
    throw DomainError("product_embeddings: factor orders do not multiply to the product order");
  }
  // Identity of a direct_product is (e1, e2); recover both from its index.
  const Element e = product.identity();
  const Element e1 = e / second_order;
  const Element e2 = e % second_order;
  std::vector<Element> first;
  std::vector<Element> second;
  for (std::size_t a = 0; a < first_order; ++a) first.push_back(static_cast<Element>(a * second_order + e2));
  for (std::size_t b = 0; b < second_order; ++b) second.push_back(static_cast<Element>(e1 * second_order + b));
  return {Subgroup(product, std::move(first)), Subgroup(product, std::move(second))};
}

Group from_generators(std::size_t degree, const std::vector<Permutation>& gens, std::string label,
                      const Limits& limits) {
  for (const auto& g : gens) {
    if (g.size() != degree) throw DomainError("generator has the wrong degree");
    std::vector<bool> hit(degree, false);
    for (auto v : g) {
      if (v >= degree || hit[v]) throw DomainError("generator is not a bijection");
      hit[v] = true;
    }
  }
  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);

  std::map<Permutation, Element> index;
  std::vector<Permutation> elements{id};
  index.emplace(id, 0);
  std::vector<Element> parent{kUnset};
  std::vector<std::size_t> via{0};
  // rmul[x * k + j] = x * gens[j]
  std::vector<Element> rmul;
  const std::size_t k = gens.size();

  for (std::size_t x = 0; x < elements.size(); ++x) {
    for (std::size_t j = 0; j < k; ++j) {
      Permutation y(degree);
      for (std::size_t i = 0; i < degree; ++i) y[i] = elements[x][gens[j][i]];
      auto [it, inserted] = index.emplace(y, static_cast<Element>(elements.size()));
      if (inserted) {
        if (elements.size() + 1 > limits.max_order) {
          throw ResourceError("from_generators: closure exceeds the realization bound max_order=" +
                              std::to_string(limits.max_order));
        }
        elements.push_back(std::move(y));
        parent.push_back(static_cast<Element>(x));
        via.push_back(j);
      }
      rmul.push_back(it->second);
    }
  }

  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t g = 0; g < n; ++g) table[g * n] = static_cast<Element>(g);
  // g * h = (g * parent(h)) * gen; parent(h) < h in BFS order.
  for (std::size_t h = 1; h < n; ++h) {
    for (std::size_t g = 0; g < n; ++g) {
      table[g * n + h] = rmul[table[g * n + parent[h]] * k + via[h]];
    }
  }
  if (label.empty()) label = "<" + std::to_string(gens.size()) + " gens on " + std::to_string(degree) + ">";
  return Group(n, std::move(table), std::move(label), limits);
}

QuotientMap quotient(const Group& g, const Subgroup& n) {
  if (!n.parent().same_as(g)) throw DomainError("quotient: subgroup belongs to a different group");
  if (!n.is_normal()) throw DomainError("quotient: subgroup is not normal");
  const std::size_t order = g.order();
  std::vector<Element> coset(order, kUnset);
  std::vector<Element> reps;
  for (Element x = 0; x < order; ++x) {
    if (coset[x] != kUnset) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element k : n.elements()) coset[g.mul(x, k)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Element> table(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) table[i * q + j] = coset[g.mul(reps[i], reps[j])];
  Group target(q, std::move(table), g.label() + " / N" + std::to_string(n.order()));
  return QuotientMap{g, std::move(target), std::move(coset)};
}

Group as_group(const Subgroup& h) {
  const Group& g = h.parent();
  const auto elems = h.elements();
  std::vector<Element> local(g.order(), kUnset);
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<Element>(i);
  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = local[g.mul(elems[i], elems[j])];
  return Group(n, std::move(table), g.label() + " | N" + std::to_string(n));
}

// ---------------------------------------------------------------- structure

Subgroup subgroup_generated(const Group& g, std::span<const Element> seed) {
  for (Element s : seed) check_element(g, s);
  std::vector<bool> member(g.order(), false);
  std::vector<Element> found{g.identity()};
  member[g.identity()] = true;
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Element s : seed) {
      Element y = g.mul(found[i], s);
      if (!member[y]) {
        member[y] = true;
        found.push_back(y);
      }
    }
  }
  // <seed> is normal iff every conjugate of every generator stays inside.
  bool normal = true;
  for (Element x = 0; x < g.order() && normal; ++x) {
    for (Element s : seed) {
      if (!member[g.mul(g.mul(x, s), g.inverse(x))]) {
        normal = false;
        break;
      }
    }
  }
  std::sort(found.begin(), found.end());
  return detail::make_subgroup_unchecked(g, std::move(found), normal);
}

std::vector<std::vector<Element>> conjugacy_classes(const Group& g) {
  const std::size_t n = g.order();
  std::vector<bool> assigned(n, false);
  std::vector<std::vector<Element>> classes;
  for (Element x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    std::vector<Element> cls;
    for (Element y = 0; y < n; ++y) {
      Element c = g.mul(g.mul(y, x), g.inverse(y));
      if (!assigned[c]) {
        assigned[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Subgroup commutator_subgroup(const Group& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<Element> commutators;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element c = g.mul(g.mul(x, y), g.mul(g.inverse(x), g.inverse(y)));
      if (!seen[c]) {
        seen[c] = true;
        commutators.push_back(c);
      }
    }
  }
  return subgroup_generated(g, commutators);
}

std::size_t element_order(const Group& g, Element x) {
  check_element(g, x);
  std::size_t k = 1;
  for (Element y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

AbelianStructure abelian_invariants(const Group& g) {
  if (!g.is_abelian()) throw DomainError("abelian_invariants: group '" + g.label() + "' is not abelian");
  // A cyclic subgroup of maximal order in an abelian group is a direct
  // summand, so the quotient carries the remaining invariant factors.
  std::vector<std::uint64_t> factors;
  Group current = g;
  while (!current.is_trivial()) {
    Element best = current.identity();
    std::size_t best_order = 1;
    for (Element x = 0; x < current.order(); ++x) {
      std::size_t o = element_order(current, x);
      if (o > best_order) {
        best_order = o;
        best = x;
      }
    }
    factors.push_back(best_order);
    const Element gen[] = {best};
    current = quotient(current, subgroup_generated(current, gen)).target;
  }
  std::reverse(factors.begin(), factors.end());
  return AbelianStructure{std::move(factors)};
}

Abelianization abelianization(const Group& g) {
  QuotientMap map = quotient(g, commutator_subgroup(g));
  AbelianStructure structure = abelian_invariants(map.target);
  return Abelianization{std::move(map), std::move(structure)};
}

}  // namespace perfgrp
