#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "genbern/exact.hpp"

namespace genbern {

/// Dense univariate polynomial over Rational in the formal variable x.
///
/// Coefficients are stored in ascending degree and trailing zeros are always
/// trimmed, so the zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  /// c * x^degree
  static Poly monomial(const Rational& c, std::size_t degree);
  static Poly x() { return monomial(Rational(1), 1); }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  Rational coeff(std::size_t i) const;

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Zero for the zero polynomial.
  Rational leading() const;

  /// Horner evaluation.
  Rational eval(const Rational& v) const;
  /// p(-x).
  Poly reflected() const;
  Poly derivative() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rational& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Poly operator*(const Rational& lhs, Poly rhs) { return rhs *= lhs; }

  friend bool operator==(const Poly&, const Poly&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Poly& p);

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace genbern
