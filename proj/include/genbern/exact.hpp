#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace genbern {

/// Arbitrary-precision signed integer.
using BigInt = mpz_class;

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Zero is 0/1.
///
/// Textual form is "p/q", or "p" when the denominator is 1.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral U>
  Rational(U value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  /// Throws DivisionByZero when `den` is zero.
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "p" or "p/q" (optional leading '-', no whitespace). The result is
  /// reduced, so "2/4" parses to 1/2. Throws std::invalid_argument on
  /// malformed text and DivisionByZero on q = 0.
  static Rational parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational inv() const;
  Rational pow(unsigned exponent) const;

  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_;
};

/// n! exactly.
BigInt factorial(unsigned n);

/// C(n, k); zero when k < 0 or k > n. Small arguments are served from a
/// shared Pascal table (kDefaultBinomialRows rows), larger ones by the
/// multiplicative formula.
BigInt binomial(unsigned n, long k);

inline constexpr unsigned kDefaultBinomialRows = 256;

/// Pascal triangle with a fixed number of rows, immutable once built.
class BinomialTable {
 public:
  explicit BinomialTable(unsigned rows);

  unsigned rows() const { return rows_; }

  /// Requires n < rows(). Out-of-range k yields zero.
  const BigInt& operator()(unsigned n, long k) const;

 private:
  unsigned rows_;
  std::vector<BigInt> entries_;  // row n starts at n(n+1)/2
};

/// Multiplicative-formula binomial; no table involved.
BigInt binomial_direct(unsigned n, long k);

}  // namespace genbern
