#include "genbern/bell.hpp"

namespace genbern {

Poly power_egf_coefficient(unsigned n, unsigned r, unsigned a, const StirlingTable& table) {
  const unsigned ar = a * r;
  std::vector<Rational> coeffs(n + 1);
  for (unsigned l = 0; l <= n; ++l) {
    const unsigned power = n - l;
    if (r == 0 && power != 0) continue;  // 0^power
    const BigInt& s = table(l + ar, ar);
    if (s == 0) continue;
    BigInt scale = BigInt(r == 0 ? 1U : r);
    mpz_pow_ui(scale.get_mpz_t(), scale.get_mpz_t(), power);
    coeffs[power] = Rational(s * binomial(n, l) * scale, binomial(l + ar, ar));
  }
  return Poly(std::move(coeffs));
}

Poly bell_closed(unsigned n, unsigned k, unsigned a, const StirlingTable& table) {
  Poly sum;
  for (unsigned r = 0; r <= k; ++r) {
    Poly term = power_egf_coefficient(n, r, a, table) * Rational(binomial(k, r));
    if ((k - r) % 2 == 1) term = -term;
    sum += term;
  }
  return sum * Rational(BigInt(1), factorial(k));
}

Poly bell_closed(unsigned n, unsigned k, unsigned a) {
  return bell_closed(n, k, a, *shared_stirling_table(n + a * k));
}

}  // namespace genbern
