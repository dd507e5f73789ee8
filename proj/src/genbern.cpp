#include "genbern/genbern.hpp"

#include <string>

#include "genbern/bell.hpp"

namespace genbern {

namespace {

void require_positive_order(unsigned a, std::string_view method) {
  if (a == 0) {
    throw InvalidOrder("order a = 0 is only supported by the series method, not " +
                       std::string(method));
  }
}

}  // namespace

std::string_view to_string(BernMethod method) {
  switch (method) {
    case BernMethod::bell: return "bell";
    case BernMethod::doublesum: return "doublesum";
    case BernMethod::series: return "series";
  }
  return "unknown";
}

std::optional<BernMethod> parse_method(std::string_view name) {
  if (name == "bell") return BernMethod::bell;
  if (name == "doublesum") return BernMethod::doublesum;
  if (name == "series") return BernMethod::series;
  return std::nullopt;
}

LambdaSeq lambda_seq(unsigned a, std::size_t count, const StirlingTable& table) {
  require_positive_order(a, "lambda_seq");
  LambdaSeq out{a, {}};
  out.terms.reserve(count);
  for (unsigned m = 1; m <= count; ++m) {
    std::vector<Rational> coeffs(m + 1);
    for (unsigned l = 0; l <= m; ++l) {
      coeffs[m - l] = Rational(table(l + a, a) * binomial(m, l), binomial(l + a, a));
    }
    out.terms.emplace_back(std::move(coeffs));
  }
  return out;
}

LambdaSeq lambda_seq(unsigned a, std::size_t count) {
  return lambda_seq(a, count, *shared_stirling_table(static_cast<unsigned>(count) + a));
}

Series<Poly> g_series(unsigned a, std::size_t order) {
  return to_poly_series(pow(expm1_over_t_series(order), a)) * exp_xt_series(order);
}

BernResult bern_bell(unsigned n, unsigned a, const StirlingTable& table) {
  require_positive_order(a, "bell");
  const LambdaSeq lambda = lambda_seq(a, n, table);
  const auto rows = bell_triangle(n, lambda.terms);
  Poly sum;
  for (unsigned k = 0; k <= n; ++k) {
    Poly term = rows[n][k] * Rational(factorial(k));
    if (k % 2 == 1) term = -term;
    sum += term;
  }
  return {n, a, sum.reflected(), BernMethod::bell};
}

BernResult bern_bell(unsigned n, unsigned a) {
  return bern_bell(n, a, *shared_stirling_table(stirling_cap_for(n, a)));
}

BernResult bern_doublesum(unsigned n, unsigned a, const StirlingTable& table) {
  require_positive_order(a, "doublesum");
  Poly sum;
  for (unsigned r = 0; r <= n; ++r) {
    Poly term = power_egf_coefficient(n, r, a, table) * Rational(binomial(n + 1, r + 1));
    if (r % 2 == 1) term = -term;
    sum += term;
  }
  return {n, a, sum.reflected(), BernMethod::doublesum};
}

BernResult bern_doublesum(unsigned n, unsigned a) {
  return bern_doublesum(n, a, *shared_stirling_table(stirling_cap_for(n, a)));
}

BernResult bern_series(unsigned n, unsigned a) {
  const Series<Poly> inv = reciprocal(g_series(a, n));
  return {n, a, egf_coeff(inv, n).reflected(), BernMethod::series};
}

BernResult bern(unsigned n, unsigned a, BernMethod method, const StirlingTable& table) {
  switch (method) {
    case BernMethod::bell: return bern_bell(n, a, table);
    case BernMethod::doublesum: return bern_doublesum(n, a, table);
    case BernMethod::series: return bern_series(n, a);
  }
  throw std::invalid_argument("unknown method");
}

BernResult bern(unsigned n, unsigned a, BernMethod method) {
  switch (method) {
    case BernMethod::bell: return bern_bell(n, a);
    case BernMethod::doublesum: return bern_doublesum(n, a);
    case BernMethod::series: return bern_series(n, a);
  }
  throw std::invalid_argument("unknown method");
}

std::vector<Rational> bernoulli_numbers(unsigned max_n) {
  std::vector<Rational> seq;
  seq.reserve(max_n);
  for (unsigned m = 1; m <= max_n; ++m) seq.emplace_back(BigInt(1), BigInt(m + 1));
  const auto rows = bell_triangle(max_n, seq);
  std::vector<Rational> out;
  out.reserve(max_n + 1);
  for (unsigned n = 0; n <= max_n; ++n) {
    Rational sum;
    for (unsigned k = 0; k <= n; ++k) {
      Rational term = rows[n][k] * Rational(factorial(k));
      sum += k % 2 == 1 ? -term : term;
    }
    out.push_back(sum);
  }
  return out;
}

Rational bernoulli_number(unsigned n) { return bernoulli_numbers(n).back(); }

}  // namespace genbern
