#include "perfgrp/numbers.hpp"

#include "perfgrp/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace perfgrp {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

const BigInt kU64Max = BigInt(std::numeric_limits<std::uint64_t>::max());

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator*(const Rational& rhs) const {
  return Rational(num_ * rhs.num_, den_ * rhs.den_);
}

Rational Rational::operator/(const Rational& rhs) const {
  if (rhs.num_ == 0) throw DomainError("division by zero rational");
  return Rational(num_ * rhs.den_, den_ * rhs.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const {
  BigInt lhs_cross = num_ * rhs.den_;
  BigInt rhs_cross = rhs.num_ * den_;
  if (lhs_cross < rhs_cross) return std::strong_ordering::less;
  if (lhs_cross > rhs_cross) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const { return num_.str() + "/" + den_.str(); }

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw DomainError("not a rational: '" + text + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

// ---------------------------------------------------------------- integers

BigInt reconstruct(const Factorization& f) {
  BigInt n = 1;
  for (const auto& [p, e] : f) n *= boost::multiprecision::pow(BigInt(p), e);
  return n;
}

std::uint64_t to_u64(const BigInt& n, const char* what) {
  if (n < 0 || n > kU64Max) {
    throw ResourceError(std::string(what) + ": input exceeds the 64-bit bound 2^64 - 1");
  }
  return static_cast<std::uint64_t>(n);
}

std::optional<std::uint64_t> try_u64(const BigInt& n) {
  if (n < 0 || n > kU64Max) return std::nullopt;
  return static_cast<std::uint64_t>(n);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (n < 0) throw DomainError("is_prime: negative input");
  return is_prime(to_u64(n, "is_prime"));
}

Factorization factorize(const BigInt& big) {
  if (big < 1) throw DomainError("factorize: input must be >= 1");
  std::uint64_t n = to_u64(big, "factorize");
  Factorization out;
  auto strip = [&](std::uint64_t p) {
    if (n % p != 0) return;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  };
  strip(2);
  strip(3);
  strip(5);
  // 2*3*5 wheel: offsets from 7 skipping multiples of 2, 3, 5.
  static constexpr std::array<std::uint64_t, 8> kGaps = {4, 2, 4, 2, 4, 6, 2, 6};
  std::uint64_t p = 7;
  std::size_t gap = 0;
  // Small cofactors are settled by trial division alone; Miller-Rabin only
  // pays off once sqrt(n) is large.
  constexpr std::uint64_t kTrialOnly = std::uint64_t{1} << 24;
  bool changed = true;
  std::uint64_t root = 0;
  while (n > 1) {
    if (changed) {
      root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
      while (root > 0 && root > n / root) --root;
      while ((root + 1) <= n / (root + 1)) ++root;
      if (n >= kTrialOnly && is_prime(n)) root = 0;
    }
    if (p > root) {
      out.push_back({n, 1});
      break;
    }
    changed = n % p == 0;
    strip(p);
    p += kGaps[gap];
    gap = (gap + 1) % kGaps.size();
  }
  return out;
}

std::vector<BigInt> divisors(const BigInt& n) {
  std::vector<BigInt> out{1};
  for (const auto& [p, e] : factorize(n)) {
    std::size_t base = out.size();
    BigInt power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt divisor_sum(const Factorization& f) {
  BigInt sigma = 1;
  for (const auto& [p, e] : f) {
    BigInt bp(p);
    sigma *= (boost::multiprecision::pow(bp, e + 1) - 1) / (bp - 1);
  }
  return sigma;
}

BigInt divisor_sum(const BigInt& n) {
  // Any n < 2^64 has sigma(n) < 2^128 and every p^(e+1) < 2^128.
  u128 sigma = 1;
  for (const auto& [p, e] : factorize(n)) {
    u128 power = 1;
    for (unsigned k = 0; k <= e; ++k) power *= p;
    sigma *= (power - 1) / (p - 1);
  }
  BigInt out = static_cast<std::uint64_t>(sigma >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(sigma);
  return out;
}

BigInt aliquot_sum(const BigInt& n) { return divisor_sum(n) - n; }

bool is_perfect_number(const BigInt& n) { return divisor_sum(n) == 2 * n; }

std::vector<BigInt> even_perfect_numbers(const BigInt& limit) {
  if (limit < 1) throw DomainError("even_perfect_numbers: limit must be >= 1");
  std::vector<BigInt> out;
  for (unsigned r = 2;; ++r) {
    BigInt mersenne = (BigInt(1) << r) - 1;
    BigInt candidate = (BigInt(1) << (r - 1)) * mersenne;
    if (candidate > limit) break;
    if (!is_prime(mersenne)) continue;
    if (!is_perfect_number(candidate)) {
      throw std::logic_error("even_perfect_numbers: classification check failed for " + candidate.str());
    }
    out.push_back(candidate);
  }
  return out;
}

Rational abundancy(const BigInt& n) { return Rational(divisor_sum(n), n); }

}  // namespace perfgrp
