#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "genbern/combinatorics.hpp"
#include "genbern/exact.hpp"
#include "genbern/poly.hpp"
#include "genbern/ring.hpp"

// Partial (incomplete exponential) Bell polynomials B_{n,k}(l_1, ..., l_{n-k+1}).
//
// Argument sequences are passed 0-based: seq[i - 1] holds l_i. All routines
// share the conventions B_{0,0} = 1, B_{n,0} = 0 for n > 0, B_{n,k} = 0 for
// k > n.

namespace genbern {

class InsufficientSequence : public std::invalid_argument {
 public:
  InsufficientSequence(std::size_t needed, std::size_t given)
      : std::invalid_argument("Bell polynomial needs " + std::to_string(needed) +
                              " sequence terms, got " + std::to_string(given)) {}
};

namespace detail {

inline void require_terms(const auto& seq, std::size_t needed) {
  if (seq.size() < needed) throw InsufficientSequence(needed, seq.size());
}

}  // namespace detail

/// Direct sum over partitions of n into k parts:
///   sum n!/(prod l_i!) * prod (seq_i / i!)^{l_i}.
/// Exponential in n; kept as a reference implementation.
template <CoefficientRing T>
T bell_enum(unsigned n, unsigned k, const std::vector<T>& seq) {
  if (k == 0) return n == 0 ? RingTraits<T>::one() : RingTraits<T>::zero();
  if (k > n) return RingTraits<T>::zero();
  const unsigned width = n - k + 1;
  detail::require_terms(seq, width);

  std::vector<T> scaled;
  scaled.reserve(width);
  for (unsigned i = 1; i <= width; ++i) {
    scaled.push_back(seq[i - 1] * Rational(BigInt(1), factorial(i)));
  }
  const BigInt n_fact = factorial(n);

  T sum = RingTraits<T>::zero();
  for_each_partition(n, k, [&](const PartitionVector& p) {
    BigInt denom = 1;
    T term = RingTraits<T>::one();
    for (unsigned i = 0; i < width; ++i) {
      const unsigned mult = p.multiplicity[i];
      if (mult == 0) continue;
      denom *= factorial(mult);
      term = term * ring_pow(scaled[i], mult);
    }
    sum = sum + term * Rational(n_fact, denom);
  });
  return sum;
}

/// B_{n,k} via B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) seq_i B_{n-i,k-1},
/// restricted to the (n - k + 1) x (k + 1) band the recurrence touches.
template <CoefficientRing T>
T bell_rec(unsigned n, unsigned k, const std::vector<T>& seq) {
  if (k == 0) return n == 0 ? RingTraits<T>::one() : RingTraits<T>::zero();
  if (k > n) return RingTraits<T>::zero();
  const unsigned d = n - k;
  detail::require_terms(seq, d + 1);

  // band[j][e] = B_{j+e, j}
  std::vector<std::vector<T>> band(k + 1, std::vector<T>(d + 1, RingTraits<T>::zero()));
  band[0][0] = RingTraits<T>::one();
  for (unsigned j = 1; j <= k; ++j) {
    for (unsigned e = 0; e <= d; ++e) {
      const unsigned m = j + e;
      T acc = RingTraits<T>::zero();
      for (unsigned i = 1; i <= e + 1; ++i) {
        // B_{m-i, j-1} sits at offset (m - i) - (j - 1) = e + 1 - i.
        acc = acc + seq[i - 1] * band[j - 1][e + 1 - i] * Rational(binomial(m - 1, i - 1));
      }
      band[j][e] = std::move(acc);
    }
  }
  return band[k][d];
}

/// Full triangle rows[m][j] = B_{m,j} for 0 <= j <= m <= n, by the same
/// recurrence as bell_rec. Needs seq.size() >= n.
template <CoefficientRing T>
std::vector<std::vector<T>> bell_triangle(unsigned n, const std::vector<T>& seq) {
  detail::require_terms(seq, n);
  std::vector<std::vector<T>> rows(n + 1);
  rows[0] = {RingTraits<T>::one()};
  for (unsigned m = 1; m <= n; ++m) {
    rows[m].assign(m + 1, RingTraits<T>::zero());
    for (unsigned j = 1; j <= m; ++j) {
      T acc = RingTraits<T>::zero();
      for (unsigned i = 1; i <= m - j + 1; ++i) {
        acc = acc + seq[i - 1] * rows[m - i][j - 1] * Rational(binomial(m - 1, i - 1));
      }
      rows[m][j] = std::move(acc);
    }
  }
  return rows;
}

/// n! [t^n] g(t)^r for g(t) = ((e^t - 1)/t)^a e^{xt}:
///   sum_{l=0}^{n} S(l+ar, ar) (rx)^{n-l} C(n,l) / C(l+ar, ar), with 0^0 = 1.
/// `table` must reach index n + a*r.
Poly power_egf_coefficient(unsigned n, unsigned r, unsigned a, const StirlingTable& table);

/// B_{n,k}(l_1, ...) for the sequence l_m = m! [t^m] g(t), in closed form:
///   (1/k!) sum_{r=0}^{k} (-1)^{k-r} C(k,r) n! [t^n] g(t)^r.
/// `table` must reach index n + a*k.
Poly bell_closed(unsigned n, unsigned k, unsigned a, const StirlingTable& table);
Poly bell_closed(unsigned n, unsigned k, unsigned a);

}  // namespace genbern
