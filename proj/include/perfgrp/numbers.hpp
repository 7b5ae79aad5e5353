#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace perfgrp {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction, always stored in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt numerator, BigInt denominator = 1);  // NOLINT: integers convert implicitly

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  Rational operator*(const Rational& rhs) const;
  Rational operator/(const Rational& rhs) const;

  bool operator==(const Rational&) const = default;
  std::strong_ordering operator<=>(const Rational& rhs) const;

  // "a/b", always with the slash (2/1, not 2).
  std::string to_string() const;

  // Inverse of to_string; also accepts a bare integer.
  static Rational parse(const std::string& text);

 private:
  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

// Primes strictly increasing, exponents >= 1. Empty for 1.
using Factorization = std::vector<PrimePower>;

BigInt reconstruct(const Factorization& f);

// Narrowing used at the boundary of the 64-bit routines. Throws ResourceError
// naming the bound when `n` does not fit.
std::uint64_t to_u64(const BigInt& n, const char* what);

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);
bool is_prime(const BigInt& n);

// Wheel trial division with a primality early-out on the cofactor.
Factorization factorize(const BigInt& n);

std::vector<BigInt> divisors(const BigInt& n);

// Sum of all divisors, evaluated multiplicatively: prod (p^(e+1) - 1) / (p - 1).
BigInt divisor_sum(const BigInt& n);
BigInt divisor_sum(const Factorization& f);

// Sum of proper divisors.
BigInt aliquot_sum(const BigInt& n);

bool is_perfect_number(const BigInt& n);

// All even perfect numbers <= limit, generated as 2^(r-1) (2^r - 1) over
// Mersenne primes 2^r - 1 and each re-checked with is_perfect_number.
std::vector<BigInt> even_perfect_numbers(const BigInt& limit);

// sigma(n) / n.
Rational abundancy(const BigInt& n);

// Fits-in-64-bits helper for serialization; nullopt when it does not.
std::optional<std::uint64_t> try_u64(const BigInt& n);

}  // namespace perfgrp
