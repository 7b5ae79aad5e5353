#pragma once

#include "perfgrp/composition.hpp"
#include "perfgrp/group.hpp"
#include "perfgrp/numbers.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace perfgrp {

// What the cofactor search needs to know about a seed group.
struct SeedSummary {
  std::string label;
  BigInt order;
  BigInt d_value;
  std::set<FactorLabel> factor_set;
  Rational ratio;  // d_value / order
};

// A simple group known only by its order; stands in for a realized table.
struct SimpleDescriptor {
  std::string label;
  BigInt order;
  bool is_simple = true;
};

SeedSummary seed_summary(const Group& g);
// D of a simple group is order + 1. Throws DomainError unless is_simple.
SeedSummary seed_summary(const SimpleDescriptor& descriptor);

struct SearchBounds {
  std::uint64_t max_prime_power = 1024;
  std::size_t max_depth = 8;
};

struct SearchNode {
  Rational residual_target;
  std::set<std::uint64_t> used_primes;
  std::vector<std::uint64_t> chain;  // prime powers, pairwise distinct primes
  std::size_t depth = 0;

  bool is_solution() const { return residual_target == Rational(1); }
  BigInt cofactor() const;
};

// Children of one DFS node, in branch order (ascending p, then ascending k).
// With residual a/b, b > 1, only the smallest prime p | b is tried, with
// exponents k >= v_p(b); with b = 1 every unused prime is tried. Children
// whose residual drops below 1 are pruned.
std::vector<SearchNode> expand(const SearchNode& node, const std::set<std::uint64_t>& forbidden_primes,
                               const SearchBounds& bounds);

// All chains whose abundancies multiply to `target`, one per cofactor,
// sorted lexicographically by chain. Throws DomainError if target < 1.
std::vector<SearchNode> solve_ratio(const Rational& target, const std::set<std::uint64_t>& forbidden_primes,
                                    const SearchBounds& bounds = {});
// Same, from a raw fraction; throws DomainError if it is not in lowest terms.
std::vector<SearchNode> solve_ratio(const BigInt& numerator, const BigInt& denominator,
                                    const std::set<std::uint64_t>& forbidden_primes, const SearchBounds& bounds = {});

// Certifies that seed x C_cofactor is perfect.
struct PerfectCertificate {
  SeedSummary seed;
  BigInt cofactor;
  std::vector<std::uint64_t> chain;  // may be empty when built by hand
  BigInt total_order;
  BigInt total_d;
};

PerfectCertificate make_certificate(const SeedSummary& seed, const BigInt& cofactor,
                                    std::vector<std::uint64_t> chain = {});

// Re-derives every certificate invariant using integer arithmetic only.
bool verify_certificate(const PerfectCertificate& certificate);

// Throws DomainError if the seed's ratio exceeds 2.
std::vector<PerfectCertificate> perfect_completions(const SeedSummary& seed, const SearchBounds& bounds = {});

}  // namespace perfgrp
