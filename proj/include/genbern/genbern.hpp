#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "genbern/combinatorics.hpp"
#include "genbern/exact.hpp"
#include "genbern/poly.hpp"
#include "genbern/series.hpp"

// Generalized Bernoulli polynomials B_n^a(x), defined by
//
//   (t / (e^t - 1))^a e^{xt} = sum_n B_n^a(x) t^n / n!.
//
// Every public result is in this standard orientation. The Bell and
// double-sum routes naturally produce B_n^a(-x); they reflect once on return.

namespace genbern {

class InvalidOrder : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// lambda_1..lambda_M for order a, where lambda_m = m! [t^m] g(t) and
/// g(t) = ((e^t - 1)/t)^a e^{xt}.
struct LambdaSeq {
  unsigned order = 0;
  std::vector<Poly> terms;  // terms[m - 1] = lambda_m

  const Poly& operator[](std::size_t m) const { return terms.at(m - 1); }
};

enum class BernMethod { bell, doublesum, series };

inline constexpr BernMethod kDefaultMethod = BernMethod::doublesum;

std::string_view to_string(BernMethod method);
std::optional<BernMethod> parse_method(std::string_view name);

struct BernResult {
  unsigned n = 0;
  unsigned a = 0;
  Poly poly;  // B_n^a(x)
  BernMethod method = kDefaultMethod;

  friend bool operator==(const BernResult&, const BernResult&) = default;
};

/// lambda_m = sum_{l=0}^{m} S(l+a, a) x^{m-l} C(m,l) / C(l+a, a).
/// `table` must reach index M + a. Throws InvalidOrder for a = 0.
LambdaSeq lambda_seq(unsigned a, std::size_t count, const StirlingTable& table);
LambdaSeq lambda_seq(unsigned a, std::size_t count);

/// g(t) = ((e^t - 1)/t)^a e^{xt} truncated at `order`, built from series
/// arithmetic alone.
Series<Poly> g_series(unsigned a, std::size_t order);

/// B_n^a(-x) = sum_{k=0}^{n} (-1)^k k! B_{n,k}(lambda_1, ..., lambda_{n-k+1}).
BernResult bern_bell(unsigned n, unsigned a, const StirlingTable& table);
BernResult bern_bell(unsigned n, unsigned a);

/// B_n^a(-x) = sum_{r=0}^{n} C(n+1, r+1) (-1)^r
///             sum_{l=0}^{n} S(l+ar, ar) (rx)^{n-l} C(n,l) / C(l+ar, ar).
BernResult bern_doublesum(unsigned n, unsigned a, const StirlingTable& table);
BernResult bern_doublesum(unsigned n, unsigned a);

/// n! [t^n] 1/g(t) computed by series reciprocal. Accepts a = 0.
BernResult bern_series(unsigned n, unsigned a);

/// Dispatch. The table is used by the bell and doublesum methods only.
BernResult bern(unsigned n, unsigned a, BernMethod method, const StirlingTable& table);
BernResult bern(unsigned n, unsigned a, BernMethod method = kDefaultMethod);

/// Stirling index the bell and doublesum methods touch for (n, a).
inline unsigned stirling_cap_for(unsigned n, unsigned a) { return n + a * n + a; }

/// Bernoulli number B_n (B_1 = -1/2) from
///   sum_{k=0}^{n} (-1)^k k! B_{n,k}(1/2, 1/3, ..., 1/(n-k+2)).
Rational bernoulli_number(unsigned n);

/// B_0..B_{max_n} sharing one Bell triangle.
std::vector<Rational> bernoulli_numbers(unsigned max_n);

}  // namespace genbern
