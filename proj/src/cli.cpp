#include "genbern/cli.hpp"

#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "genbern/bell.hpp"
#include "genbern/genbern.hpp"

namespace genbern {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kMethodNames{"bell", "doublesum", "series"};
const std::vector<std::string> kFormatNames{"json", "csv", "latex", "plain"};

CLI::Option* add_method(CLI::App* app, std::string& method) {
  return app->add_option("--method", method, "Evaluation method")
      ->check(CLI::IsMember(kMethodNames))
      ->capture_default_str();
}

CLI::Option* add_format(CLI::App* app, std::string& format,
                        const std::vector<std::string>& allowed = kFormatNames) {
  return app->add_option("--format", format, "Output format")
      ->check(CLI::IsMember(allowed))
      ->capture_default_str();
}

BernMethod method_or_throw(const std::string& name) {
  if (auto m = parse_method(name)) return *m;
  throw UsageError("--method: unknown method \"" + name + "\"");
}

OutputFormat format_or_throw(const std::string& name) {
  if (auto f = parse_format(name)) return *f;
  throw UsageError("--format: unknown format \"" + name + "\"");
}

void require_order(unsigned a, BernMethod method) {
  if (a == 0 && method != BernMethod::series) throw UsageError("a=0 requires --method series");
}

}  // namespace

int cmd_verify(const VerifyOptions& options, OutputFormat format, std::ostream& out) {
  const VerifyReport report = run_verify(options);
  if (format == OutputFormat::json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
      nlohmann::ordered_json item = nlohmann::ordered_json::object();
      item["name"] = c.name;
      item["range"] = c.range;
      item["pass"] = c.pass;
      item["counterexample"] = c.counterexample ? nlohmann::ordered_json(*c.counterexample) : nullptr;
      doc["checks"].push_back(std::move(item));
    }
    doc["overall"] = report.overall();
    out << doc.dump() << '\n';
  } else {
    for (const auto& c : report.checks) {
      out << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  " << c.range << '\n';
      if (c.counterexample) out << "      first counterexample: " << *c.counterexample << '\n';
    }
    if (const CheckResult* failed = report.first_failure()) {
      out << "overall: FAIL (first failed check: " << failed->name << ")\n";
    } else {
      out << "overall: PASS\n";
    }
  }
  return report.overall() ? kExitOk : kExitVerifyFailed;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generalized Bernoulli polynomials B_n^(a)(x)", "genbern"};
  app.require_subcommand(1);

  struct {
    unsigned n = 0;
    unsigned k = 0;
    unsigned a = 1;
    unsigned max_n = 0;
    unsigned verify_max_n = 20;
    unsigned max_a = 4;
    unsigned enum_cap = 10;
    std::string method{to_string(kDefaultMethod)};
    std::string format = "plain";
    std::string at_x;
  } opt;

  auto* bern_cmd = app.add_subcommand("bern", "Compute B_n^(a)(x)");
  bern_cmd->add_option("--n", opt.n, "Degree")->required();
  bern_cmd->add_option("--a", opt.a, "Order")->capture_default_str();
  add_method(bern_cmd, opt.method);
  add_format(bern_cmd, opt.format);

  auto* table_cmd = app.add_subcommand("table", "Rows B_0^(a)..B_{max_n}^(a)");
  table_cmd->add_option("--max-n", opt.max_n, "Largest degree")->required();
  table_cmd->add_option("--a", opt.a, "Order")->capture_default_str();
  add_method(table_cmd, opt.method);
  add_format(table_cmd, opt.format);

  auto* bernoulli_cmd = app.add_subcommand("bernoulli", "Bernoulli numbers B_0..B_{max_n}");
  bernoulli_cmd->add_option("--max-n", opt.max_n, "Largest index")->required();
  add_format(bernoulli_cmd, opt.format);

  auto* bell_cmd = app.add_subcommand("bell", "Partial Bell polynomial B_{n,k} of the lambda sequence");
  bell_cmd->add_option("--n", opt.n, "n")->required();
  bell_cmd->add_option("--k", opt.k, "k")->required();
  bell_cmd->add_option("--a", opt.a, "Order")->capture_default_str();
  bell_cmd->add_option("--at-x", opt.at_x, "Evaluate at the rational point p/q");
  add_format(bell_cmd, opt.format);

  auto* verify_cmd = app.add_subcommand("verify", "Run the identity verification suite");
  verify_cmd->add_option("--max-n", opt.verify_max_n, "Largest degree")->capture_default_str();
  verify_cmd->add_option("--max-a", opt.max_a, "Largest order")->capture_default_str();
  verify_cmd->add_option("--enum-cap", opt.enum_cap, "Largest n for partition enumeration")
      ->capture_default_str();
  add_format(verify_cmd, opt.format, {"plain", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const OutputFormat format = format_or_throw(opt.format);

    if (bern_cmd->parsed()) {
      const BernMethod method = method_or_throw(opt.method);
      require_order(opt.a, method);
      out << render_bern(bern(opt.n, opt.a, method), format) << '\n';
      return kExitOk;
    }

    if (table_cmd->parsed()) {
      const BernMethod method = method_or_throw(opt.method);
      require_order(opt.a, method);
      std::vector<BernResult> rows;
      if (method != BernMethod::series) {
        const auto table = shared_stirling_table(stirling_cap_for(opt.max_n, opt.a));
        for (unsigned n = 0; n <= opt.max_n; ++n) rows.push_back(bern(n, opt.a, method, *table));
      } else {
        for (unsigned n = 0; n <= opt.max_n; ++n) rows.push_back(bern_series(n, opt.a));
      }
      out << render_table(rows, format) << '\n';
      return kExitOk;
    }

    if (bernoulli_cmd->parsed()) {
      out << render_bernoulli(bernoulli_numbers(opt.max_n), format) << '\n';
      return kExitOk;
    }

    if (bell_cmd->parsed()) {
      if (opt.a == 0) throw UsageError("--a: bell requires a >= 1");
      BellValue value{opt.n, opt.k, opt.a, bell_closed(opt.n, opt.k, opt.a), std::nullopt};
      if (!opt.at_x.empty()) {
        try {
          value.at_x = Rational::parse(opt.at_x);
        } catch (const std::exception& e) {
          throw UsageError(std::string("--at-x: ") + e.what());
        }
      }
      out << render_bell(value, format) << '\n';
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      VerifyOptions options;
      options.max_n = opt.verify_max_n;
      options.max_a = opt.max_a;
      options.enum_cap = opt.enum_cap;
      return cmd_verify(options, format, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace genbern
