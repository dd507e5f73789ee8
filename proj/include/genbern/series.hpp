#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "genbern/exact.hpp"
#include "genbern/poly.hpp"
#include "genbern/ring.hpp"

namespace genbern {

class OrderMismatch : public std::invalid_argument {
 public:
  OrderMismatch() : std::invalid_argument("series truncation orders differ") {}
};

class NonInvertibleLeadingCoefficient : public std::domain_error {
 public:
  NonInvertibleLeadingCoefficient()
      : std::domain_error("constant term of series is not a unit of the coefficient ring") {}
};

/// Truncated power series c_0 + c_1 t + ... + c_N t^N with ordinary
/// coefficients. Every value carries exactly N + 1 coefficients; binary
/// operations require both operands to share N.
template <CoefficientRing R>
class Series {
 public:
  /// `coeffs` must be non-empty; its size fixes the order.
  explicit Series(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
  }

  static Series zero(std::size_t order) {
    return Series(std::vector<R>(order + 1, RingTraits<R>::zero()));
  }
  static Series constant(const R& c, std::size_t order) {
    Series out = zero(order);
    out.coeffs_[0] = c;
    return out;
  }
  static Series one(std::size_t order) { return constant(RingTraits<R>::one(), order); }

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<R>& coeffs() const { return coeffs_; }
  const R& operator[](std::size_t i) const { return coeffs_.at(i); }

  Series operator-() const {
    Series out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend Series operator+(const Series& lhs, const Series& rhs) {
    check_orders(lhs, rhs);
    Series out = lhs;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = out.coeffs_[i] + rhs.coeffs_[i];
    return out;
  }
  friend Series operator-(const Series& lhs, const Series& rhs) { return lhs + (-rhs); }

  /// Cauchy product truncated at the common order.
  friend Series operator*(const Series& lhs, const Series& rhs) {
    check_orders(lhs, rhs);
    const std::size_t n = lhs.order();
    Series out = zero(n);
    for (std::size_t m = 0; m <= n; ++m) {
      R acc = RingTraits<R>::zero();
      for (std::size_t i = 0; i <= m; ++i) acc = acc + lhs.coeffs_[i] * rhs.coeffs_[m - i];
      out.coeffs_[m] = std::move(acc);
    }
    return out;
  }

  friend Series operator*(Series lhs, const Rational& scalar) {
    for (auto& c : lhs.coeffs_) c = c * scalar;
    return lhs;
  }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  static void check_orders(const Series& lhs, const Series& rhs) {
    if (lhs.order() != rhs.order()) throw OrderMismatch();
  }

  std::vector<R> coeffs_;
};

/// 1/f via g_0 = 1/c_0, g_m = -(1/c_0) * sum_{i=1..m} c_i g_{m-i}.
/// Throws NonInvertibleLeadingCoefficient when c_0 is not a unit.
template <CoefficientRing R>
Series<R> reciprocal(const Series<R>& f) {
  const auto inv0 = RingTraits<R>::unit_inverse(f[0]);
  if (!inv0) throw NonInvertibleLeadingCoefficient();
  const std::size_t n = f.order();
  std::vector<R> g;
  g.reserve(n + 1);
  g.push_back(*inv0);
  const R neg_inv0 = -*inv0;
  for (std::size_t m = 1; m <= n; ++m) {
    R acc = RingTraits<R>::zero();
    for (std::size_t i = 1; i <= m; ++i) acc = acc + f[i] * g[m - i];
    g.push_back(neg_inv0 * acc);
  }
  return Series<R>(std::move(g));
}

/// f^exponent by repeated squaring; f^0 is the constant 1.
template <CoefficientRing R>
Series<R> pow(const Series<R>& f, unsigned exponent) {
  Series<R> result = Series<R>::one(f.order());
  Series<R> base = f;
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

/// n! * c_n: the coefficient as seen by an exponential generating function.
template <CoefficientRing R>
R egf_coeff(const Series<R>& f, std::size_t n) {
  return f[n] * Rational(factorial(static_cast<unsigned>(n)));
}

/// Applies `fn` to every coefficient, keeping the order.
template <class Fn, CoefficientRing R>
auto map_coeffs(const Series<R>& f, Fn fn) {
  using Out = decltype(fn(f[0]));
  std::vector<Out> out;
  out.reserve(f.order() + 1);
  for (const auto& c : f.coeffs()) out.push_back(fn(c));
  return Series<Out>(std::move(out));
}

/// Rational series viewed as a series with constant-polynomial coefficients.
inline Series<Poly> to_poly_series(const Series<Rational>& f) {
  return map_coeffs(f, [](const Rational& c) { return Poly::constant(c); });
}

/// (e^t - 1)/t = sum_l t^l/(l+1)!, truncated at `order`.
inline Series<Rational> expm1_over_t_series(std::size_t order) {
  std::vector<Rational> c;
  c.reserve(order + 1);
  for (std::size_t l = 0; l <= order; ++l) {
    c.emplace_back(BigInt(1), factorial(static_cast<unsigned>(l + 1)));
  }
  return Series<Rational>(std::move(c));
}

/// e^t - 1 = sum_{j>=1} t^j/j!, truncated at `order`.
inline Series<Rational> expm1_series(std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t j = 1; j <= order; ++j) c[j] = Rational(BigInt(1), factorial(static_cast<unsigned>(j)));
  return Series<Rational>(std::move(c));
}

/// e^{xt} = sum_k (x^k/k!) t^k with polynomial coefficients.
inline Series<Poly> exp_xt_series(std::size_t order) {
  std::vector<Poly> c;
  c.reserve(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    c.push_back(Poly::monomial(Rational(BigInt(1), factorial(static_cast<unsigned>(k))), k));
  }
  return Series<Poly>(std::move(c));
}

}  // namespace genbern
