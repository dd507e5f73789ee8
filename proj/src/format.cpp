#include "genbern/format.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace genbern {

namespace {

using Json = nlohmann::ordered_json;

Json coeffs_to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  }
  return obj.at(key);
}

unsigned unsigned_field(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  if (!v.is_number_unsigned()) {
    throw std::invalid_argument(std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  return v.get<unsigned>();
}

Rational rational_from_json(const Json& v) {
  if (!v.is_string()) throw std::invalid_argument("rational values must be strings");
  return Rational::parse(v.get<std::string>());
}

Poly poly_from_json(const Json& v) {
  if (!v.is_array()) throw std::invalid_argument("\"coeffs\" must be an array");
  std::vector<Rational> coeffs;
  coeffs.reserve(v.size());
  for (const auto& c : v) coeffs.push_back(rational_from_json(c));
  Poly p(coeffs);
  if (p.coeffs().size() != coeffs.size()) {
    throw std::invalid_argument("\"coeffs\" has trailing zeros");
  }
  return p;
}

Json bern_json(const BernResult& r) {
  Json out = Json::object();
  out["n"] = r.n;
  out["a"] = r.a;
  out["method"] = std::string(to_string(r.method));
  out["coeffs"] = coeffs_to_json(r.poly);
  return out;
}

BernResult bern_from_json(const Json& obj) {
  BernResult r;
  r.n = unsigned_field(obj, "n");
  r.a = unsigned_field(obj, "a");
  const Json& method = field(obj, "method");
  if (!method.is_string()) throw std::invalid_argument("\"method\" must be a string");
  const auto parsed = parse_method(method.get<std::string>());
  if (!parsed) throw std::invalid_argument("unknown method \"" + method.get<std::string>() + "\"");
  r.method = *parsed;
  r.poly = poly_from_json(field(obj, "coeffs"));
  return r;
}

std::string csv_row(unsigned n, const Poly& p, std::size_t width) {
  std::string row = std::to_string(n);
  for (std::size_t i = 0; i < width; ++i) row += "," + p.coeff(i).str();
  return row;
}

std::string bern_label_plain(const BernResult& r) {
  return "B_" + std::to_string(r.n) + "^(" + std::to_string(r.a) + ")(x)";
}

std::string bern_label_latex(const BernResult& r) {
  return "B_{" + std::to_string(r.n) + "}^{(" + std::to_string(r.a) + ")}(x)";
}

template <class Term>
std::string join_terms(const Poly& p, const char* plus, const char* minus, const char* lead_minus,
                       Term term) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const Rational& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += lead_minus;
    } else {
      out += negative ? minus : plus;
    }
    out += term(negative ? -c : c, i);
    first = false;
  }
  return out;
}

}  // namespace

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::latex: return "latex";
    case OutputFormat::plain: return "plain";
  }
  return "unknown";
}

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "latex") return OutputFormat::latex;
  if (name == "plain") return OutputFormat::plain;
  return std::nullopt;
}

std::string render_plain(const Poly& p) {
  return join_terms(p, " + ", " - ", "-", [](const Rational& mag, std::size_t i) {
    if (i == 0) return mag.str();
    std::string var = i == 1 ? "x" : "x^" + std::to_string(i);
    return mag == Rational(1) ? var : mag.str() + "*" + var;
  });
}

std::string render_latex(const Rational& r) {
  if (r.is_integer()) return r.str();
  const std::string sign = r.sign() < 0 ? "-" : "";
  const BigInt num = r.sign() < 0 ? BigInt(-r.num()) : r.num();
  return sign + "\\frac{" + num.get_str() + "}{" + r.den().get_str() + "}";
}

std::string render_latex(const Poly& p) {
  return join_terms(p, " + ", " - ", "-", [](const Rational& mag, std::size_t i) {
    if (i == 0) return render_latex(mag);
    std::string var = i == 1 ? "x" : "x^{" + std::to_string(i) + "}";
    return mag == Rational(1) ? var : render_latex(mag) + " " + var;
  });
}

std::string bern_result_to_json(const BernResult& result) { return bern_json(result).dump(); }

BernResult bern_result_from_json(std::string_view text) { return bern_from_json(parse_json(text)); }

std::string render_bern(const BernResult& result, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return bern_result_to_json(result);
    case OutputFormat::csv: return csv_row(result.n, result.poly, result.n + 1);
    case OutputFormat::latex: return render_latex(result.poly);
    case OutputFormat::plain: return render_plain(result.poly);
  }
  return {};
}

std::string render_table(const std::vector<BernResult>& rows, OutputFormat format) {
  if (format == OutputFormat::json) {
    Json out = Json::array();
    for (const auto& r : rows) out.push_back(bern_json(r));
    return out.dump();
  }
  const std::size_t width = rows.empty() ? 0 : rows.back().n + 1;
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) os << '\n';
    const BernResult& r = rows[i];
    switch (format) {
      case OutputFormat::csv: os << csv_row(r.n, r.poly, width); break;
      case OutputFormat::latex: os << bern_label_latex(r) << " &= " << render_latex(r.poly) << " \\\\"; break;
      case OutputFormat::plain: os << bern_label_plain(r) << " = " << render_plain(r.poly); break;
      case OutputFormat::json: break;
    }
  }
  return os.str();
}

std::vector<BernResult> table_from_json(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_array()) throw std::invalid_argument("table JSON must be an array");
  std::vector<BernResult> rows;
  rows.reserve(doc.size());
  for (const auto& item : doc) rows.push_back(bern_from_json(item));
  return rows;
}

std::string render_bernoulli(const std::vector<Rational>& numbers, OutputFormat format) {
  if (format == OutputFormat::json) {
    Json out = Json::array();
    for (const auto& b : numbers) out.push_back(b.str());
    return out.dump();
  }
  std::ostringstream os;
  for (std::size_t n = 0; n < numbers.size(); ++n) {
    if (n) os << '\n';
    switch (format) {
      case OutputFormat::csv: os << n << ',' << numbers[n]; break;
      case OutputFormat::latex: os << "B_{" << n << "} &= " << render_latex(numbers[n]) << " \\\\"; break;
      case OutputFormat::plain: os << numbers[n]; break;
      case OutputFormat::json: break;
    }
  }
  return os.str();
}

std::vector<Rational> bernoulli_from_json(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_array()) throw std::invalid_argument("Bernoulli JSON must be an array");
  std::vector<Rational> out;
  out.reserve(doc.size());
  for (const auto& v : doc) out.push_back(rational_from_json(v));
  return out;
}

std::string render_bell(const BellValue& value, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      Json out = Json::object();
      out["n"] = value.n;
      out["k"] = value.k;
      out["a"] = value.a;
      out["coeffs"] = coeffs_to_json(value.poly);
      if (value.at_x) {
        out["at_x"] = value.at_x->str();
        out["value"] = value.poly.eval(*value.at_x).str();
      }
      return out.dump();
    }
    case OutputFormat::csv: {
      std::string row = std::to_string(value.n) + "," + std::to_string(value.k) + "," +
                        std::to_string(value.a);
      if (value.at_x) return row + "," + value.at_x->str() + "," + value.poly.eval(*value.at_x).str();
      for (const auto& c : value.poly.coeffs()) row += "," + c.str();
      return row;
    }
    case OutputFormat::latex:
      return value.at_x ? render_latex(value.poly.eval(*value.at_x)) : render_latex(value.poly);
    case OutputFormat::plain:
      return value.at_x ? value.poly.eval(*value.at_x).str() : render_plain(value.poly);
  }
  return {};
}

BellValue bell_value_from_json(std::string_view text) {
  const Json doc = parse_json(text);
  BellValue v;
  v.n = unsigned_field(doc, "n");
  v.k = unsigned_field(doc, "k");
  v.a = unsigned_field(doc, "a");
  v.poly = poly_from_json(field(doc, "coeffs"));
  if (doc.contains("at_x")) {
    v.at_x = rational_from_json(doc.at("at_x"));
    if (rational_from_json(field(doc, "value")) != v.poly.eval(*v.at_x)) {
      throw std::invalid_argument("\"value\" disagrees with \"coeffs\" at \"at_x\"");
    }
  }
  return v;
}

}  // namespace genbern
