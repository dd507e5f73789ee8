#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genbern/exact.hpp"
#include "genbern/genbern.hpp"
#include "genbern/poly.hpp"

// Text renderings shared by the command-line tool.
//
// Rationals always appear as "p/q" or "p" (LaTeX: \frac{p}{q}), never as
// floating point. JSON outputs have a parser alongside so they round-trip.

namespace genbern {

enum class OutputFormat { json, csv, latex, plain };

std::string_view to_string(OutputFormat format);
std::optional<OutputFormat> parse_format(std::string_view name);

/// Descending powers with explicit signs: "x^2 - x + 1/6", "0" for zero.
std::string render_plain(const Poly& p);
/// "x^{2} - x + \frac{1}{6}".
std::string render_latex(const Poly& p);
std::string render_latex(const Rational& r);

/// {"n":2,"a":1,"method":"doublesum","coeffs":["1/6","-1","1"]}
std::string bern_result_to_json(const BernResult& result);
/// Throws std::invalid_argument when the text does not follow the schema.
BernResult bern_result_from_json(std::string_view text);

std::string render_bern(const BernResult& result, OutputFormat format);

/// Rows must be ordered by n starting at 0. CSV rows are "n,c_0,...,c_{max_n}"
/// with missing coefficients padded by "0"; JSON is an array of BernResult.
std::string render_table(const std::vector<BernResult>& rows, OutputFormat format);
std::vector<BernResult> table_from_json(std::string_view text);

/// JSON is an array of rational strings indexed by n.
std::string render_bernoulli(const std::vector<Rational>& numbers, OutputFormat format);
std::vector<Rational> bernoulli_from_json(std::string_view text);

struct BellValue {
  unsigned n = 0;
  unsigned k = 0;
  unsigned a = 0;
  Poly poly;
  std::optional<Rational> at_x;  // when set, the output is poly(at_x)

  friend bool operator==(const BellValue&, const BellValue&) = default;
};

std::string render_bell(const BellValue& value, OutputFormat format);
BellValue bell_value_from_json(std::string_view text);

}  // namespace genbern
