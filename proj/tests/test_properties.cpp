// Invariants checked over the whole test corpus.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "perfgrp/composition.hpp"
#include "perfgrp/errors.hpp"
#include "perfgrp/normal.hpp"

#include <numeric>

using namespace perfgrp;

namespace {

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Returns p if n = p^k for some k >= 1, otherwise 0.
std::uint64_t prime_power_base(std::uint64_t n) {
  if (n < 2) return 0;
  const auto f = factorize(n);
  return f.size() == 1 ? f.front().prime : 0;
}

}  // namespace

TEST_CASE("corpus is large enough") { CHECK(corpus::groups().size() >= 40); }

TEST_CASE("group invariants") {
  for (const auto& g : corpus::groups()) {
    CAPTURE(g.label());
    const Element e = g.identity();
    for (Element x = 0; x < g.order(); ++x) {
      CHECK(g.mul(e, x) == x);
      CHECK(g.mul(x, g.inverse(x)) == e);
      CHECK(g.order() % element_order(g, x) == 0);
    }
  }
}

TEST_CASE("quotients: |G/N| |N| = |G| and the lattice correspondence") {
  for (const auto& g : corpus::groups()) {
    CAPTURE(g.label());
    const NormalLattice lattice = normal_subgroups(g);
    const BigInt d = d_group(lattice).d_value;
    for (const auto& n : lattice.members) {
      const QuotientMap q = quotient(g, n);
      CHECK(q.target.order() * n.order() == g.order());
      CHECK(q.kernel() == n);
      // Normal subgroups of G/N are the images of normal M >= N, with |M/N| = |M|/|N|.
      BigInt above = 0;
      std::size_t count_above = 0;
      for (const auto& m : lattice.members) {
        if (std::includes(m.elements().begin(), m.elements().end(), n.elements().begin(), n.elements().end())) {
          above += m.order();
          ++count_above;
        }
      }
      const NormalLattice ql = normal_subgroups(q.target);
      CHECK(ql.size() == count_above);
      CHECK(d_group(ql).d_value * n.order() == above);
      CHECK(above <= d);
    }
  }
}

TEST_CASE("counting identity: sum of nu equals D") {
  for (const auto& g : corpus::groups()) {
    CAPTURE(g.label());
    const NormalLattice lattice = normal_subgroups(g);
    BigInt total = 0;
    for (Element x = 0; x < g.order(); ++x) total += nu(lattice, x);
    CHECK(total == d_group(lattice).d_value);
    CHECK(nu(lattice, g.identity()) == lattice.size());
  }
}

TEST_CASE("abelianization: cyclic iff it has an element of full order") {
  for (const auto& g : corpus::groups()) {
    CAPTURE(g.label());
    const Abelianization ab = abelianization(g);
    const Group& a = ab.group();
    CHECK(ab.structure.order() == a.order());
    CHECK(a.order() * commutator_subgroup(g).order() == g.order());
    CHECK(ab.is_cyclic() == (oracle::count_of_order(a, a.order()) > 0));
  }
}

TEST_CASE("abelian quotient theorem") {
  std::size_t covered = 0;
  for (const auto& g : corpus::groups()) {
    CAPTURE(g.label());
    const NormalLattice lattice = normal_subgroups(g);
    if (d_group(lattice).d_value > 2 * g.order()) continue;
    ++covered;
    CHECK(abelianization(g).is_cyclic());
    CHECK_FALSE(normal_generators(lattice).empty());
  }
  CHECK(covered >= 20);
}

TEST_CASE("prime-index formula") {
  for (const auto& g : corpus::groups()) {
    CAPTURE(g.label());
    const NormalLattice lattice = normal_subgroups(g);
    const AbelianStructure ab = abelianization(g).structure;
    for (auto p : primes_up_to(std::max<std::size_t>(g.order(), 2))) {
      CAPTURE(p);
      std::size_t enumerated = 0;
      for (const auto& n : lattice.members) enumerated += (n.index() == p);
      const std::size_t r = ab.p_rank(p);
      CHECK(enumerated == (ipow(p, r) - 1) / (p - 1));
      CHECK(prime_index_count(lattice, ab, p).count == enumerated);
    }
  }
}

TEST_CASE("tightness: deficient groups and their quotients") {
  for (const auto& g : corpus::groups()) {
    CAPTURE(g.label());
    const NormalLattice lattice = normal_subgroups(g);
    if (d_group(lattice).d_value <= 2 * g.order()) CHECK(is_tight(lattice));
    if (!is_tight(lattice)) continue;
    for (const auto& n : lattice.members) CHECK(is_tight(quotient(g, n).target));
  }
}

TEST_CASE("p-groups: D(G) = 1 mod p") {
  std::size_t seen = 0;
  for (const auto& g : corpus::groups()) {
    const auto p = prime_power_base(g.order());
    if (p == 0) continue;
    ++seen;
    CAPTURE(g.label());
    CHECK(d_group(g).d_value % p == 1);
  }
  CHECK(seen >= 10);
}

TEST_CASE("cyclic groups: D(C_n) = sigma(n)") {
  for (std::size_t n = 1; n <= 60; ++n) {
    CAPTURE(n);
    CHECK(d_group(cyclic(n)).d_value == oracle::naive_sigma(n));
    CHECK(d_group(cyclic(n)).is_perfect == is_perfect_number(n));
  }
}

TEST_CASE("dihedral laws") {
  for (std::size_t n = 3; n <= 25; n += 2) {
    CAPTURE(n);
    CHECK(d_group(dihedral(2 * n)).d_value == oracle::naive_sigma(n) + 2 * n);
  }
  for (std::size_t n = 4; n <= 24; n += 2) {
    CAPTURE(n);
    CHECK(d_group(dihedral(2 * n)).d_value > 4 * n);
  }
}

TEST_CASE("composition factors: c(X) = c(X/K) + c(K), independent of the series") {
  for (const auto& g : corpus::groups()) {
    CAPTURE(g.label());
    const FactorMultiset c = composition_factors(g);
    CHECK(c == composition_factors(g, SeriesChoice::Last));
    CHECK(c.order() == g.order());
    for (const auto& k : normal_subgroups(g).members) {
      CHECK(c == composition_factors(quotient(g, k).target) + composition_factors(as_group(k)));
    }
  }
}

TEST_CASE("direct products of corpus pairs") {
  const std::vector<Group> small = {cyclic(2), cyclic(3), cyclic(4), cyclic(5), cyclic(6), cyclic(7), symmetric(3),
                                    alternating(4), dihedral(8), dihedral(10), corpus::quaternion8(), corpus::frobenius21()};
  for (const auto& a : small) {
    for (const auto& b : small) {
      if (a.order() * b.order() > 200) continue;
      CAPTURE(a.label());
      CAPTURE(b.label());
      const Group p = direct_product(a, b);
      // Conjugacy classes of a product are products of classes.
      std::vector<std::size_t> sizes, expected;
      for (const auto& c : conjugacy_classes(p)) sizes.push_back(c.size());
      for (const auto& ca : conjugacy_classes(a))
        for (const auto& cb : conjugacy_classes(b)) expected.push_back(ca.size() * cb.size());
      std::sort(sizes.begin(), sizes.end());
      std::sort(expected.begin(), expected.end());
      CHECK(sizes == expected);

      const NormalLattice la = normal_subgroups(a), lb = normal_subgroups(b), lp = normal_subgroups(p);
      if (std::gcd(a.order(), b.order()) == 1) CHECK(coprime(a, b));
      if (!coprime(a, b)) {
        CHECK(lp.size() >= la.size() * lb.size());
        continue;
      }
      CHECK(lp.size() == la.size() * lb.size());
      CHECK(d_group(lp).d_value == d_group(la).d_value * d_group(lb).d_value);
      const SubgroupFunction one = [](const Subgroup&) { return BigInt(1); };
      CHECK(lifted_sum(lp, one) == lifted_sum(la, one) * lifted_sum(lb, one));
      CHECK(is_tight(lp) == (is_tight(la) && is_tight(lb)));
    }
  }
}

TEST_CASE("non-coprime products break multiplicativity") {
  const DResult v4 = d_group(direct_product(cyclic(2), cyclic(2)));
  CHECK(v4.d_value == 11);
  CHECK(v4.d_value != d_group(cyclic(2)).d_value * d_group(cyclic(2)).d_value);
}
