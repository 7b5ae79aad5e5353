#include "perfgrp/search.hpp"

#include "perfgrp/errors.hpp"
#include "perfgrp/normal.hpp"

#include <algorithm>
#include <map>

namespace perfgrp {

namespace {

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

bool is_prime_power(std::uint64_t q, std::uint64_t* base) {
  if (q < 2) return false;
  auto f = factorize(BigInt(q));
  if (f.size() != 1) return false;
  *base = f.front().prime;
  return true;
}

void push_children_for_prime(const SearchNode& node, std::uint64_t p, unsigned min_exponent,
                             const SearchBounds& bounds, std::vector<SearchNode>& out) {
  std::uint64_t power = 1;
  for (unsigned k = 1; power <= bounds.max_prime_power / p; ++k) {
    power *= p;
    if (k < min_exponent) continue;
    Rational child = node.residual_target / abundancy(BigInt(power));
    if (child < Rational(1)) break;  // abundancy of p^k grows with k
    SearchNode next = node;
    next.residual_target = std::move(child);
    next.used_primes.insert(p);
    next.chain.push_back(power);
    next.depth = node.depth + 1;
    out.push_back(std::move(next));
  }
}

void dfs(const SearchNode& node, const std::set<std::uint64_t>& forbidden, const SearchBounds& bounds,
         std::vector<SearchNode>& solutions) {
  if (node.is_solution()) {
    solutions.push_back(node);
    return;
  }
  for (const auto& child : expand(node, forbidden, bounds)) dfs(child, forbidden, bounds, solutions);
}

}  // namespace

SeedSummary seed_summary(const Group& g) {
  DResult d = d_group(g);
  return SeedSummary{g.label(), d.order, d.d_value, composition_factors(g).labels(), d.ratio};
}

SeedSummary seed_summary(const SimpleDescriptor& descriptor) {
  if (!descriptor.is_simple) {
    throw DomainError("seed_summary: D of '" + descriptor.label + "' is not derivable without its normal lattice");
  }
  if (descriptor.order < 2) throw DomainError("seed_summary: a simple group has order >= 2");
  const BigInt d = descriptor.order + 1;
  std::set<FactorLabel> factors{FactorLabel::simple_of_order(to_u64(descriptor.order, "seed_summary"))};
  return SeedSummary{descriptor.label, descriptor.order, d, std::move(factors), Rational(d, descriptor.order)};
}

BigInt SearchNode::cofactor() const {
  BigInt m = 1;
  for (auto q : chain) m *= q;
  return m;
}

std::vector<SearchNode> expand(const SearchNode& node, const std::set<std::uint64_t>& forbidden,
                               const SearchBounds& bounds) {
  std::vector<SearchNode> out;
  if (node.residual_target <= Rational(1) || node.depth >= bounds.max_depth) return out;
  auto blocked = [&](std::uint64_t p) { return node.used_primes.contains(p) || forbidden.contains(p); };

  const BigInt& b = node.residual_target.denominator();
  if (b > 1) {
    // sigma(m)/m in lowest terms has a denominator dividing m, so the
    // smallest prime of b has to be one of the remaining chain entries.
    const auto f = factorize(b);
    const auto [p, v] = f.front();
    if (blocked(p) || p > bounds.max_prime_power) return out;
    push_children_for_prime(node, p, v, bounds, out);
    return out;
  }
  for (std::uint64_t p : primes_up_to(bounds.max_prime_power)) {
    if (!blocked(p)) push_children_for_prime(node, p, 1, bounds, out);
  }
  return out;
}

std::vector<SearchNode> solve_ratio(const Rational& target, const std::set<std::uint64_t>& forbidden_primes,
                                    const SearchBounds& bounds) {
  if (target < Rational(1)) throw DomainError("solve_ratio: target " + target.to_string() + " is below 1");
  std::vector<SearchNode> found;
  dfs(SearchNode{target, {}, {}, 0}, forbidden_primes, bounds, found);

  std::sort(found.begin(), found.end(), [](const SearchNode& a, const SearchNode& b) { return a.chain < b.chain; });
  std::vector<SearchNode> unique;
  std::set<BigInt> cofactors;
  for (auto& node : found) {
    if (cofactors.insert(node.cofactor()).second) unique.push_back(std::move(node));
  }
  return unique;
}

std::vector<SearchNode> solve_ratio(const BigInt& numerator, const BigInt& denominator,
                                    const std::set<std::uint64_t>& forbidden_primes, const SearchBounds& bounds) {
  if (denominator < 1 || boost::multiprecision::gcd(numerator, denominator) != 1) {
    throw DomainError("solve_ratio: target " + numerator.str() + "/" + denominator.str() + " is not in lowest terms");
  }
  return solve_ratio(Rational(numerator, denominator), forbidden_primes, bounds);
}

PerfectCertificate make_certificate(const SeedSummary& seed, const BigInt& cofactor, std::vector<std::uint64_t> chain) {
  if (cofactor < 1) throw DomainError("certificate cofactor must be >= 1");
  return PerfectCertificate{seed, cofactor, std::move(chain), seed.order * cofactor, seed.d_value * divisor_sum(cofactor)};
}

bool verify_certificate(const PerfectCertificate& c) {
  const SeedSummary& s = c.seed;
  if (s.order < 1 || s.d_value < 1 || c.cofactor < 1) return false;
  if (s.ratio != Rational(s.d_value, s.order)) return false;
  if (c.total_order != s.order * c.cofactor) return false;
  if (c.total_d != s.d_value * divisor_sum(c.cofactor)) return false;
  if (c.total_d != 2 * c.total_order) return false;
  // C_m contributes the factors C_p for p | m; none may already occur in the seed.
  for (const auto& pp : factorize(c.cofactor)) {
    if (s.factor_set.contains(FactorLabel{FactorLabel::Kind::CyclicPrime, pp.prime})) return false;
  }
  if (!c.chain.empty()) {
    BigInt product = 1;
    std::set<std::uint64_t> primes;
    for (auto q : c.chain) {
      std::uint64_t p = 0;
      if (!is_prime_power(q, &p) || !primes.insert(p).second) return false;
      product *= q;
    }
    if (product != c.cofactor) return false;
  }
  return true;
}

std::vector<PerfectCertificate> perfect_completions(const SeedSummary& seed, const SearchBounds& bounds) {
  if (seed.ratio > Rational(2)) {
    throw DomainError("seed '" + seed.label + "' has ratio " + seed.ratio.to_string() +
                      " > 2: an over-perfect seed cannot be completed by direct product");
  }
  std::set<std::uint64_t> forbidden;
  for (const auto& label : seed.factor_set) {
    if (label.is_cyclic()) forbidden.insert(label.parameter);
  }
  std::vector<PerfectCertificate> out;
  for (auto& node : solve_ratio(Rational(2) / seed.ratio, forbidden, bounds)) {
    PerfectCertificate cert = make_certificate(seed, node.cofactor(), node.chain);
    if (!verify_certificate(cert)) {
      throw std::logic_error("perfect_completions produced an unverifiable certificate for cofactor " +
                             cert.cofactor.str());
    }
    out.push_back(std::move(cert));
  }
  return out;
}

}  // namespace perfgrp
