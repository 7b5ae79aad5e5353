#include "perfgrp/paper_check.hpp"

#include "perfgrp/composition.hpp"
#include "perfgrp/normal.hpp"
#include "perfgrp/report.hpp"
#include "perfgrp/search.hpp"
#include "perfgrp/spec.hpp"

#include <algorithm>
#include <functional>

namespace perfgrp {

namespace {

BigInt d_of(const Group& g) { return d_group(g).d_value; }

std::vector<BigInt> lattice_orders(const Group& g) {
  std::vector<BigInt> out;
  for (const auto& m : normal_subgroups(g).members) out.emplace_back(m.order());
  return out;
}

bool has_chain(const std::vector<SearchNode>& nodes, const std::vector<std::uint64_t>& chain) {
  return std::any_of(nodes.begin(), nodes.end(), [&](const SearchNode& n) { return n.chain == chain; });
}

bool has_completion(const std::vector<PerfectCertificate>& certs, const BigInt& m, const BigInt& total) {
  return std::any_of(certs.begin(), certs.end(), [&](const PerfectCertificate& c) {
    return c.cofactor == m && c.total_order == total && verify_certificate(c);
  });
}

// Small groups for the "D(G) <= 2|G|" consequences.
std::vector<Group> small_groups() {
  std::vector<Group> out;
  for (std::size_t n = 1; n <= 12; ++n) out.push_back(cyclic(n));
  for (std::size_t m = 6; m <= 16; m += 2) out.push_back(dihedral(m));
  out.push_back(symmetric(3));
  out.push_back(symmetric(4));
  out.push_back(alternating(4));
  out.push_back(alternating(5));
  out.push_back(direct_product(symmetric(3), cyclic(5)));
  out.push_back(direct_product(cyclic(2), cyclic(2)));
  return out;
}

}  // namespace

std::vector<CheckResult> run_paper_checks() {
  std::vector<std::pair<std::string, std::function<bool()>>> checks;
  auto add = [&](std::string name, std::function<bool()> fn) { checks.emplace_back(std::move(name), std::move(fn)); };

  // Perfect numbers.
  add("D(6) = 12, 6 = 1+2+3", [] { return divisor_sum(6) == 12 && aliquot_sum(6) == 6; });
  add("D(28) - 28 = 28", [] { return aliquot_sum(28) == 28; });
  add("6, 28, 496 are perfect", [] { return is_perfect_number(6) && is_perfect_number(28) && is_perfect_number(496); });
  add("even perfect numbers <= 500 are 6, 28, 496",
      [] { return even_perfect_numbers(500) == std::vector<BigInt>{6, 28, 496}; });
  add("127 is prime", [] { return is_prime(std::uint64_t{127}); });
  add("361 = 19^2", [] { return factorize(361) == Factorization{{19, 2}}; });
  add("D(61)/61 = 62/61", [] { return abundancy(61) == Rational(62, 61); });
  add("D(8)/8 = 15/8", [] { return abundancy(8) == Rational(15, 8); });

  // Small D(G) values.
  add("D(A1..A4) = 1, 1, 4, 17", [] {
    return d_of(alternating(1)) == 1 && d_of(alternating(2)) == 1 && d_of(alternating(3)) == 4 &&
           d_of(alternating(4)) == 17;
  });
  add("D(S1..S4) = 1, 3, 10, 41", [] {
    return d_of(symmetric(1)) == 1 && d_of(symmetric(2)) == 3 && d_of(symmetric(3)) == 10 &&
           d_of(symmetric(4)) == 41;
  });
  add("D(C6) = 12, D(C28) = 56, D(C496) = 992, all perfect", [] {
    auto a = d_group(cyclic(6)), b = d_group(cyclic(28)), c = d_group(cyclic(496));
    return a.d_value == 12 && b.d_value == 56 && c.d_value == 992 && a.is_perfect && b.is_perfect && c.is_perfect;
  });
  add("|C496| = 496", [] { return cyclic(496).order() == 496; });
  add("C6 has one normal subgroup per divisor: 1, 2, 3, 6",
      [] { return lattice_orders(cyclic(6)) == std::vector<BigInt>{1, 2, 3, 6}; });
  add("normal subgroups of S4 have orders 1, 4, 12, 24",
      [] { return lattice_orders(symmetric(4)) == std::vector<BigInt>{1, 4, 12, 24}; });
  add("D(E6) = D(S3) = 10", [] { return d_of(dihedral(6)) == 10; });
  add("D(E2n) = D(Cn) + 2n for n = 3, 5, 7, 9", [] {
    for (std::size_t n : {3, 5, 7, 9}) {
      if (d_of(dihedral(2 * n)) != divisor_sum(n) + 2 * n) return false;
    }
    return true;
  });
  add("D(E2n) > 4n for n = 4, 6, 8", [] {
    for (std::size_t n : {4, 6, 8}) {
      if (d_of(dihedral(2 * n)) <= 4 * n) return false;
    }
    return true;
  });
  add("D(G) = 1 mod p for p-groups C8, D8, D16, C3 x C3, C5", [] {
    const std::pair<Group, unsigned> groups[] = {{cyclic(8), 2}, {dihedral(8), 2}, {dihedral(16), 2},
                                                 {direct_product(cyclic(3), cyclic(3)), 3}, {cyclic(5), 5}};
    for (const auto& [g, p] : groups) {
      if (d_of(g) % p != 1) return false;
    }
    return true;
  });
  add("A5 is simple of order 60",
      [] { return alternating(5).order() == 60 && is_simple(alternating(5)) && normal_subgroups(alternating(5)).size() == 2; });
  add("D(A5)/|A5| = 61/60", [] { return d_group(alternating(5)).ratio == Rational(61, 60); });
  add("D(C61)/|C61| = 62/61", [] { return d_group(cyclic(61)).ratio == Rational(62, 61); });

  // Multiplicativity.
  add("S3 and C5 are coprime", [] { return coprime(symmetric(3), cyclic(5)); });
  add("|S3 x C5| = 30 and D(S3 x C5) = (1+3+6)(1+5) = 60 = 2|S3 x C5|", [] {
    Group g = direct_product(symmetric(3), cyclic(5));
    auto d = d_group(g);
    return g.order() == 30 && d.d_value == 60 && d_of(symmetric(3)) * d_of(cyclic(5)) == 60 && d.is_perfect;
  });
  add("certificate S3 x C5 with cofactor 1 verifies",
      [] { return verify_certificate(make_certificate(seed_summary(direct_product(symmetric(3), cyclic(5))), 1)); });
  add("A5 seed: ratio 61/60", [] { return seed_summary(alternating(5)).ratio == Rational(61, 60); });
  add("target 120/61 is met by the chain C61, C31, C8",
      [] { return has_chain(solve_ratio(Rational(120, 61), {}, {256, 6}), {61, 31, 8}); });
  add("A5 x C15128 is perfect, of order 907680", [] {
    return has_completion(perfect_completions(seed_summary(alternating(5))), 15128, 907680);
  });
  add("target 720/361 is met by the chain C361, C127, C8",
      [] { return has_chain(solve_ratio(Rational(720, 361), {}, {512, 6}), {361, 127, 8}); });
  add("A6 x C366776 is perfect, of order 132039360", [] {
    return has_completion(perfect_completions(seed_summary(SimpleDescriptor{"A6", 360})), 366776, 132039360);
  });

  // Counting and prime-index consequences.
  add("sum of nu(g) over S3 = 10 = D(S3)", [] {
    auto lattice = normal_subgroups(symmetric(3));
    BigInt total = 0;
    for (Element x = 0; x < 6; ++x) total += nu(lattice, x);
    return total == 10;
  });
  add("D(G) <= 2|G| implies a normal generator, cyclic abelianization and tightness", [] {
    for (const auto& g : small_groups()) {
      auto lattice = normal_subgroups(g);
      if (d_group(lattice).d_value > 2 * BigInt(g.order())) continue;
      if (normal_generators(lattice).empty() || !abelianization(g).is_cyclic() || !is_tight(lattice)) return false;
    }
    return true;
  });
  add("number of normal subgroups of C6 = 4", [] {
    return lifted_sum(cyclic(6), [](const Subgroup&) { return BigInt(1); }) == 4;
  });

  // Interface.
  add("parse 'S3 x C5'", [] {
    return parse_spec("S3 x C5") == GroupSpec::product(GroupSpec::leaf(GroupSpec::Kind::Symmetric, 3),
                                                        GroupSpec::leaf(GroupSpec::Kind::Cyclic, 5));
  });
  add("parse 'A5 x C15128'", [] {
    return parse_spec("A5 x C15128") == GroupSpec::product(GroupSpec::leaf(GroupSpec::Kind::Alternating, 5),
                                                            GroupSpec::leaf(GroupSpec::Kind::Cyclic, 15128));
  });
  add("analyze C6: D = 12, perfect", [] {
    auto r = analyze(parse_spec("C6"));
    return r.d_value == 12 && r.is_perfect;
  });
  add("analyze S3 x C5: D = 60, perfect", [] {
    auto r = analyze(parse_spec("S3 x C5"));
    return r.d_value == 60 && r.is_perfect;
  });
  add("analyze A5 x C15128: symbolic, perfect, order 907680", [] {
    auto r = analyze(parse_spec("A5 x C15128"));
    return r.symbolic && r.is_perfect && r.order == 907680;
  });
  add("analyze S4 as JSON: d_value 41", [] { return to_json(analyze(parse_spec("S4")))["d_value"] == 41; });

  std::vector<CheckResult> results;
  for (auto& [name, fn] : checks) {
    CheckResult r{name, false, {}};
    try {
      r.passed = fn();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace perfgrp
