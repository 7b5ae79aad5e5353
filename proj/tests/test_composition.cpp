#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "perfgrp/composition.hpp"
#include "perfgrp/errors.hpp"

using namespace perfgrp;

namespace {

FactorMultiset make(std::initializer_list<std::pair<FactorLabel, unsigned>> entries) {
  FactorMultiset m;
  for (const auto& [label, k] : entries) m.add(label, k);
  return m;
}

const auto C = FactorLabel::cyclic_prime;

}  // namespace

TEST_CASE("FactorLabel") {
  CHECK(C(2).to_string() == "C2");
  CHECK(FactorLabel::nonabelian_simple(60).to_string() == "simple(60)");
  CHECK(FactorLabel::simple_of_order(7) == C(7));
  CHECK_THROWS_AS(C(4), DomainError);
  CHECK_THROWS_AS(FactorLabel::nonabelian_simple(61), DomainError);
  CHECK_THROWS_AS(FactorLabel::nonabelian_simple(30), DomainError);
  CHECK_THROWS_AS(FactorLabel::nonabelian_simple(20160), DomainError);
}

TEST_CASE("FactorMultiset") {
  const FactorMultiset a = make({{C(2), 2}, {C(5), 1}});
  const FactorMultiset b = make({{C(2), 1}, {FactorLabel::nonabelian_simple(360), 1}});
  const FactorMultiset sum = a + b;
  CHECK(sum.counts().at(C(2)) == 3);
  CHECK(sum.counts().at(C(5)) == 1);
  CHECK(sum.order() == 8 * 5 * 360);
  CHECK(sum.to_string() == "{C2:3, C5:1, simple(360):1}");
  CHECK(FactorMultiset{}.order() == 1);
}

TEST_CASE("is_simple") {
  CHECK(is_simple(cyclic(7)));
  CHECK(is_simple(alternating(5)));
  CHECK_FALSE(is_simple(cyclic(6)));
  CHECK_FALSE(is_simple(cyclic(1)));
  CHECK(is_simple(alternating(6)));
  CHECK_FALSE(is_simple(symmetric(5)));
}

TEST_CASE("composition_factors") {
  CHECK(composition_factors(cyclic(1)).empty());
  CHECK(composition_factors(cyclic(6)) == make({{C(2), 1}, {C(3), 1}}));
  CHECK(composition_factors(symmetric(4)) == make({{C(2), 3}, {C(3), 1}}));
  CHECK(composition_factors(direct_product(cyclic(2), alternating(5))) ==
        make({{C(2), 1}, {FactorLabel::nonabelian_simple(60), 1}}));
  CHECK(composition_factors(symmetric(5)) == make({{C(2), 1}, {FactorLabel::nonabelian_simple(60), 1}}));
  CHECK(composition_factors(alternating(6)) == make({{FactorLabel::nonabelian_simple(360), 1}}));
  for (const auto& g : corpus::groups()) CHECK(composition_factors(g).order() == g.order());
}

TEST_CASE("coprime") {
  CHECK(coprime(symmetric(3), cyclic(5)));
  CHECK_FALSE(coprime(cyclic(6), cyclic(10)));
  CHECK(coprime(alternating(5), cyclic(2)));
  CHECK(coprime(alternating(5), dihedral(8)));
  CHECK_FALSE(coprime(symmetric(5), cyclic(2)));

  // C15128 = C8 x C31 x C61 is too large to realize; its factors are known.
  const FactorMultiset c15128 = make({{C(2), 3}, {C(31), 1}, {C(61), 1}});
  CHECK(coprime(composition_factors(alternating(5)), c15128));
  CHECK_FALSE(coprime(composition_factors(symmetric(3)), c15128));
}
