// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
// throughout. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "genbern/bell.hpp"
#include "genbern/cli.hpp"
#include "genbern/format.hpp"
#include "genbern/genbern.hpp"
#include "genbern/series.hpp"

using namespace genbern;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& what) {
    if (pass) detail = what;
    pass = false;
  }
};

struct Criterion {
  std::string name;
  double time_limit_s;  // <= 0: no limit
  std::function<Outcome()> body;
};

Rational q(long p, long d = 1) { return Rational(BigInt(p), BigInt(d)); }

std::string where(std::initializer_list<std::pair<const char*, unsigned>> vars) {
  std::string out;
  for (const auto& [k, v] : vars) {
    if (!out.empty()) out += ", ";
    out += std::string(k) + "=" + std::to_string(v);
  }
  return out;
}

int run_cli_quiet(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "genbern");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  return code;
}

Outcome cross_method() {
  Outcome o;
  unsigned count = 0;
  for (unsigned a = 1; a <= 5; ++a) {
    for (unsigned n = 0; n <= 25; ++n) {
      const Poly bell = bern_bell(n, a).poly;
      const Poly sum = bern_doublesum(n, a).poly;
      const Poly series = bern_series(n, a).poly;
      if (bell != sum || bell != series) o.fail(where({{"n", n}, {"a", a}}));
      ++count;
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " polynomials identical";
  return o;
}

Outcome lambda_consistency() {
  Outcome o;
  for (unsigned a = 1; a <= 4; ++a) {
    const LambdaSeq lambda = lambda_seq(a, 20);
    const Series<Poly> g = g_series(a, 20);
    for (unsigned m = 1; m <= 20; ++m) {
      if (lambda[m] != egf_coeff(g, m)) o.fail(where({{"m", m}, {"a", a}}));
    }
  }
  if (o.pass) o.detail = "m<=20, a<=4";
  return o;
}

Outcome egf_identity() {
  Outcome o;
  constexpr unsigned order = 20;
  for (unsigned a = 1; a <= 3; ++a) {
    std::vector<Poly> coeffs;
    for (unsigned k = 0; k <= order; ++k) {
      coeffs.push_back(bern_bell(k, a).poly.reflected() * Rational(BigInt(1), factorial(k)));
    }
    const Series<Poly> product = Series<Poly>(std::move(coeffs)) * g_series(a, order);
    if (product != Series<Poly>::one(order)) o.fail(where({{"a", a}}));
  }
  if (o.pass) o.detail = "product = 1 through t^20, a in {1,2,3}";
  return o;
}

Outcome bell_agreement() {
  Outcome o;
  for (unsigned a = 1; a <= 3; ++a) {
    const LambdaSeq lambda = lambda_seq(a, 25);
    for (unsigned n = 0; n <= 25; ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        const Poly rec = bell_rec(n, k, lambda.terms);
        if (rec != bell_closed(n, k, a)) o.fail("rec vs closed at " + where({{"n", n}, {"k", k}, {"a", a}}));
        if (n <= 12 && bell_enum(n, k, lambda.terms) != rec) {
          o.fail("enum vs rec at " + where({{"n", n}, {"k", k}, {"a", a}}));
        }
      }
    }
  }
  if (o.pass) o.detail = "enum=rec=closed n<=12; rec=closed n<=25; a in {1,2,3}";
  return o;
}

Outcome bernoulli_reproduction() {
  Outcome o;
  const auto oracle_series = reciprocal(expm1_over_t_series(40));
  const std::vector<Rational> qi = bernoulli_numbers(40);
  for (unsigned n = 0; n <= 40; ++n) {
    const Rational oracle = egf_coeff(oracle_series, n);
    if (qi[n] != oracle) o.fail("Bell formula vs series at " + where({{"n", n}}));
    if (bernoulli_number(n) != oracle) o.fail("bernoulli_number at " + where({{"n", n}}));
  }
  const std::vector<std::pair<unsigned, Rational>> frozen{
      {1, q(-1, 2)}, {2, q(1, 6)}, {4, q(-1, 30)}, {10, q(5, 66)}, {12, q(-691, 2730)}};
  for (const auto& [n, value] : frozen) {
    if (qi[n] != value) o.fail("B_" + std::to_string(n) + " = " + qi[n].str());
  }
  for (unsigned k = 1; k <= 12; ++k) {
    if (!qi[2 * k + 1].is_zero()) o.fail("B_" + std::to_string(2 * k + 1) + " nonzero");
  }
  if (o.pass) o.detail = "n<=40; B_12 = " + qi[12].str();
  return o;
}

Outcome stirling_oracle() {
  Outcome o;
  const StirlingTable table(20);
  for (unsigned n = 1; n <= 20; ++n) {
    if (table(n, 0) != 0) o.fail(where({{"n", n}, {"k", 0}}));
    for (unsigned k = 1; k <= n; ++k) {
      if (!stirling2_gf_check(n, k, table)) o.fail(where({{"n", n}, {"k", k}}));
    }
  }
  if (table(0, 0) != 1) o.fail("S(0,0)");
  if (o.pass) o.detail = "1<=k<=n<=20";
  return o;
}

Outcome hockey_stick() {
  Outcome o;
  for (unsigned n = 0; n <= 30; ++n) {
    for (unsigned r = 0; r <= n; ++r) {
      BigInt sum = 0;
      for (unsigned k = r; k <= n; ++k) sum += binomial(k, r);
      if (sum != binomial(n + 1, r + 1)) o.fail(where({{"n", n}, {"r", r}}));
    }
  }
  if (o.pass) o.detail = "0<=r<=n<=30";
  return o;
}

Outcome structure() {
  Outcome o;
  for (unsigned a = 1; a <= 4; ++a) {
    Poly previous;
    for (unsigned n = 0; n <= 20; ++n) {
      for (auto method : {BernMethod::bell, BernMethod::doublesum, BernMethod::series}) {
        const Poly p = bern(n, a, method).poly;
        if (p.degree() != static_cast<long>(n) || p.leading() != q(1)) {
          o.fail("degree/monic at " + where({{"n", n}, {"a", a}}));
        }
        if (n >= 1 && p.derivative() != previous * Rational(n)) {
          o.fail("derivative at " + where({{"n", n}, {"a", a}}));
        }
      }
      previous = bern(n, a).poly;
    }
  }
  if (o.pass) o.detail = "n<=20, a<=4, all methods";
  return o;
}

Outcome cli_contract() {
  Outcome o;
  std::string text;
  if (run_cli_quiet({"verify"}, &text) != kExitOk) o.fail("verify with defaults did not exit 0");

  if (run_cli_quiet({"bern", "--n", "2", "--a", "1", "--format", "json"}, &text) != kExitOk ||
      text != "{\"n\":2,\"a\":1,\"method\":\"doublesum\",\"coeffs\":[\"1/6\",\"-1\",\"1\"]}\n") {
    o.fail("bern json output");
  }
  for (unsigned a = 1; a <= 3; ++a) {
    for (const char* method : {"bell", "doublesum", "series"}) {
      run_cli_quiet({"table", "--max-n", "10", "--a", std::to_string(a), "--method", method, "--format", "json"},
                    &text);
      const auto rows = table_from_json(text);
      bool same = rows.size() == 11;
      for (unsigned n = 0; same && n <= 10; ++n) same = rows[n] == bern(n, a, *parse_method(method));
      if (!same || render_table(rows, OutputFormat::json) + "\n" != text) {
        o.fail(std::string("table json round-trip, method ") + method);
      }
    }
  }
  run_cli_quiet({"bernoulli", "--max-n", "20", "--format", "json"}, &text);
  if (render_bernoulli(bernoulli_from_json(text), OutputFormat::json) + "\n" != text) {
    o.fail("bernoulli json round-trip");
  }
  run_cli_quiet({"bell", "--n", "5", "--k", "2", "--a", "2", "--at-x", "3/4", "--format", "json"}, &text);
  if (render_bell(bell_value_from_json(text), OutputFormat::json) + "\n" != text) {
    o.fail("bell json round-trip");
  }

  if (run_cli_quiet({"bern", "--n", "1", "--a", "0", "--method", "doublesum"}) != kExitUsage) {
    o.fail("a=0 with doublesum did not exit 2");
  }
  if (run_cli_quiet({"bern", "--n", "2", "--unknown-flag"}) != kExitUsage) o.fail("unknown flag did not exit 2");
  if (run_cli_quiet({"bern", "--n", "-3"}) != kExitUsage) o.fail("negative --n did not exit 2");
  if (o.pass) o.detail = "verify exit 0; json round-trips; usage errors exit 2";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"cross-method equality (n<=25, a<=5)", 60.0, cross_method},
      {"theorem-proof lambda consistency (m<=20, a<=4)", 0, lambda_consistency},
      {"EGF defining identity through t^20 (a<=3)", 0, egf_identity},
      {"Bell three-way agreement (n<=12; rec=closed n<=25)", 120.0, bell_agreement},
      {"Bernoulli-number specialization (n<=40)", 0, bernoulli_reproduction},
      {"Stirling generating-function oracle (n<=20)", 0, stirling_oracle},
      {"hockey-stick identity (n<=30)", 0, hockey_stick},
      {"structural invariants (n<=20, a<=4)", 0, structure},
      {"CLI contract", 0, cli_contract},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs > c.time_limit_s) {
      o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit_s) + " s");
    }
    if (!o.pass) ++failures;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.pass ? "[PASS] " : "[FAIL] ") << c.name << " -- " << o.detail << " (" << secs << " s)";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
