#pragma once

#include <concepts>
#include <optional>

#include "genbern/exact.hpp"
#include "genbern/poly.hpp"

namespace genbern {

/// Per-type constants and unit test for the coefficient rings used by Series
/// and the Bell polynomial routines.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }
  static std::optional<Rational> unit_inverse(const Rational& c) {
    if (c.is_zero()) return std::nullopt;
    return c.inv();
  }
};

// Units of Q[x] are the nonzero constants.
template <>
struct RingTraits<Poly> {
  static Poly zero() { return Poly(); }
  static Poly one() { return Poly::constant(Rational(1)); }
  static std::optional<Poly> unit_inverse(const Poly& c) {
    if (c.degree() != 0) return std::nullopt;
    return Poly::constant(c.leading().inv());
  }
};

/// A commutative ring with Rational scalars: the minimal surface the series
/// and Bell code relies on.
template <class R>
concept CoefficientRing = std::regular<R> && requires(const R& a, const R& b, const Rational& q) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { a * q } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { RingTraits<R>::zero() } -> std::convertible_to<R>;
  { RingTraits<R>::one() } -> std::convertible_to<R>;
  { RingTraits<R>::unit_inverse(a) } -> std::convertible_to<std::optional<R>>;
};

template <CoefficientRing R>
R ring_pow(const R& base, unsigned exponent) {
  R result = RingTraits<R>::one();
  R b = base;
  while (exponent) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent) b = b * b;
  }
  return result;
}

}  // namespace genbern
