#include "genbern/exact.hpp"

#include <cctype>

namespace genbern {

namespace {

bool is_digit_run(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digit_run(num_text) || !is_digit_run(den_text)) {
    throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
  }
  BigInt num(std::string(num_text), 10);
  BigInt den(std::string(den_text), 10);
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::inv() const {
  if (is_zero()) throw DivisionByZero();
  Rational out;
  out.value_ = 1 / value_;
  return out;
}

Rational Rational::pow(unsigned exponent) const {
  Rational out;
  mpz_pow_ui(out.value_.get_num_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.value_.get_den_mpz_t(), value_.get_den_mpz_t(), exponent);
  return out;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BinomialTable::BinomialTable(unsigned rows) : rows_(rows) {
  entries_.reserve(static_cast<std::size_t>(rows) * (rows + 1) / 2);
  for (unsigned n = 0; n < rows; ++n) {
    const std::size_t prev = static_cast<std::size_t>(n - 1) * n / 2;
    for (unsigned k = 0; k <= n; ++k) {
      if (k == 0 || k == n) {
        entries_.emplace_back(1);
      } else {
        entries_.push_back(entries_[prev + k - 1] + entries_[prev + k]);
      }
    }
  }
}

const BigInt& BinomialTable::operator()(unsigned n, long k) const {
  static const BigInt zero(0);
  if (n >= rows_) throw std::out_of_range("binomial table row out of range");
  if (k < 0 || k > static_cast<long>(n)) return zero;
  return entries_[static_cast<std::size_t>(n) * (n + 1) / 2 + static_cast<std::size_t>(k)];
}

BigInt binomial_direct(unsigned n, long k) {
  if (k < 0 || k > static_cast<long>(n)) return 0;
  unsigned kk = static_cast<unsigned>(k);
  if (kk > n - kk) kk = n - kk;
  BigInt out = 1;
  for (unsigned i = 1; i <= kk; ++i) {
    out *= n - kk + i;
    out /= i;  // exact: out is C(n - kk + i, i) here
  }
  return out;
}

BigInt binomial(unsigned n, long k) {
  static const BinomialTable table(kDefaultBinomialRows);
  if (n < table.rows()) return table(n, k);
  return binomial_direct(n, k);
}

}  // namespace genbern
