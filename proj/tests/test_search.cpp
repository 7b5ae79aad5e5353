#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "perfgrp/errors.hpp"
#include "perfgrp/search.hpp"

#include <algorithm>
#include <chrono>
#include <random>

using namespace perfgrp;

namespace {

bool has_chain(const std::vector<SearchNode>& nodes, const std::vector<std::uint64_t>& chain) {
  return std::any_of(nodes.begin(), nodes.end(), [&](const SearchNode& n) { return n.chain == chain; });
}

const PerfectCertificate* find_cofactor(const std::vector<PerfectCertificate>& certs, const BigInt& m) {
  auto it = std::find_if(certs.begin(), certs.end(), [&](const PerfectCertificate& c) { return c.cofactor == m; });
  return it == certs.end() ? nullptr : &*it;
}

}  // namespace

TEST_CASE("seed_summary") {
  const SeedSummary a5 = seed_summary(alternating(5));
  CHECK(a5.ratio == Rational(61, 60));
  CHECK(a5.d_value == 61);
  CHECK(a5.factor_set == std::set<FactorLabel>{FactorLabel::nonabelian_simple(60)});

  const SeedSummary a6 = seed_summary(SimpleDescriptor{"A6", 360});
  CHECK(a6.ratio == Rational(361, 360));
  CHECK(a6.d_value == 361);
  CHECK(a6.factor_set == std::set<FactorLabel>{FactorLabel::nonabelian_simple(360)});
  // Realized A6 agrees with the descriptor.
  CHECK(seed_summary(alternating(6)).ratio == a6.ratio);

  CHECK(seed_summary(cyclic(1)).ratio == Rational(1));
  CHECK(seed_summary(SimpleDescriptor{"C7", 7}).factor_set == std::set<FactorLabel>{FactorLabel::cyclic_prime(7)});
  CHECK_THROWS_AS(seed_summary(SimpleDescriptor{"S5", 120, false}), DomainError);
}

TEST_CASE("solve_ratio") {
  const auto trivial = solve_ratio(Rational(1), {});
  REQUIRE(trivial.size() == 1);
  CHECK(trivial.front().chain.empty());

  const auto a5 = solve_ratio(Rational(120, 61), {}, SearchBounds{256, 6});
  CHECK(has_chain(a5, {61, 31, 8}));
  // The chain needs the prime 2, so forbidding it removes the solution.
  CHECK_FALSE(has_chain(solve_ratio(Rational(120, 61), {2, 3, 5}, SearchBounds{256, 6}), {61, 31, 8}));

  const auto a6 = solve_ratio(Rational(720, 361), {}, SearchBounds{512, 6});
  CHECK(has_chain(a6, {361, 127, 8}));
  // 361 > 256: the bound cuts the chain off.
  CHECK(solve_ratio(Rational(720, 361), {}, SearchBounds{256, 6}).empty());
  // So does depth 2.
  CHECK(solve_ratio(Rational(720, 361), {}, SearchBounds{512, 2}).empty());

  CHECK_THROWS_AS(solve_ratio(Rational(1, 2), {}), DomainError);
  CHECK_THROWS_AS(solve_ratio(BigInt(240), BigInt(122), {}), DomainError);
  CHECK(has_chain(solve_ratio(BigInt(120), BigInt(61), {}, SearchBounds{256, 6}), {61, 31, 8}));
}

TEST_CASE("solve_ratio residual algebra is exact") {
  for (const auto& target : {Rational(120, 61), Rational(720, 361), Rational(2), Rational(6, 5), Rational(15, 8)}) {
    for (const auto& node : solve_ratio(target, {}, SearchBounds{256, 4})) {
      Rational product(1);
      std::set<std::uint64_t> primes;
      for (auto q : node.chain) {
        product = product * abundancy(q);
        const auto f = factorize(q);
        REQUIRE(f.size() == 1);
        CHECK(primes.insert(f.front().prime).second);
      }
      CHECK(product == target);
      CHECK(node.residual_target == Rational(1));
      CHECK(abundancy(node.cofactor()) == target);
    }
  }
}

TEST_CASE("solve_ratio finds exactly the brute-force cofactors for 15/8") {
  const auto nodes = solve_ratio(Rational(15, 8), {}, SearchBounds{16, 8});
  CHECK(has_chain(nodes, {8}));
  std::set<BigInt> found;
  for (const auto& n : nodes) found.insert(n.cofactor());
  std::set<BigInt> brute;
  for (std::uint64_t m = 1; m <= 16; ++m)
    if (Rational(oracle::naive_sigma(m), m) == Rational(15, 8)) brute.insert(m);
  CHECK(found == brute);
}

TEST_CASE("solve_ratio agrees with a brute-force scan on small bounds") {
  // Every m <= 64 is a product of prime powers <= 64 with at most 3 primes.
  for (std::uint64_t m = 1; m <= 64; ++m) {
    const Rational target(oracle::naive_sigma(m), m);
    const auto nodes = solve_ratio(target, {}, SearchBounds{64, 3});
    std::set<BigInt> found;
    for (const auto& n : nodes) found.insert(n.cofactor());
    std::set<BigInt> brute;
    for (std::uint64_t k = 1; k <= 64; ++k)
      if (Rational(oracle::naive_sigma(k), k) == target) brute.insert(k);
    // Cofactors beyond 64 may also hit the target; those below must match.
    std::set<BigInt> found_small;
    for (const auto& f : found)
      if (f <= 64) found_small.insert(f);
    CHECK_MESSAGE(found_small == brute, "m = " << m);
  }
}

TEST_CASE("expand forces the denominator primes") {
  std::mt19937_64 rng(99);
  const SearchBounds bounds{1024, 8};
  for (int i = 0; i < 300; ++i) {
    const BigInt b = rng() % 5000 + 2;
    const BigInt a = b + rng() % (b + 1) + 1;  // a/b in (1, 2]
    const Rational residual(a, b);
    if (residual.denominator() == 1) continue;
    const SearchNode node{residual, {}, {}, 0};
    const auto denom_primes = factorize(residual.denominator());
    for (const auto& child : expand(node, {}, bounds)) {
      const auto q = child.chain.back();
      const auto p = factorize(q).front().prime;
      CHECK(std::any_of(denom_primes.begin(), denom_primes.end(), [&](const PrimePower& pp) { return pp.prime == p; }));
      CHECK(child.residual_target.denominator() % p != 0);
      CHECK(child.residual_target >= Rational(1));
      CHECK(child.depth == 1);
    }
  }
}

TEST_CASE("perfect_completions") {
  const auto a5 = perfect_completions(seed_summary(alternating(5)));
  const auto* c = find_cofactor(a5, 15128);
  REQUIRE(c != nullptr);
  CHECK(c->total_order == 907680);
  CHECK(c->chain == std::vector<std::uint64_t>{61, 31, 8});

  const auto a6 = perfect_completions(seed_summary(SimpleDescriptor{"A6", 360}));
  c = find_cofactor(a6, 366776);
  REQUIRE(c != nullptr);
  CHECK(c->total_order == 132039360);
  CHECK(c->total_d == 264078720);

  const auto c6 = perfect_completions(seed_summary(cyclic(6)));
  REQUIRE_FALSE(c6.empty());
  CHECK(find_cofactor(c6, 1) != nullptr);

  // S3 forbids 2 and 3; the 6/5 residual is met by C5.
  const auto s3 = perfect_completions(seed_summary(symmetric(3)));
  CHECK(find_cofactor(s3, 5) != nullptr);

  CHECK_THROWS_AS(perfect_completions(seed_summary(cyclic(12))), DomainError);  // 7/3 > 2
  CHECK_THROWS_AS(perfect_completions(seed_summary(direct_product(cyclic(2), cyclic(2)))), DomainError);
}
