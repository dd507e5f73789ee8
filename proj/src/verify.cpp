#include "genbern/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "genbern/bell.hpp"
#include "genbern/format.hpp"
#include "genbern/genbern.hpp"
#include "genbern/series.hpp"

namespace genbern {

namespace {

std::string range_text(const std::string& body) { return "[" + body + "]"; }

class CheckBuilder {
 public:
  CheckBuilder(std::string name, std::string range) {
    result_.name = std::move(name);
    result_.range = range_text(range);
  }

  // Records the first failure only.
  void fail(const std::string& what) {
    if (result_.pass) {
      result_.pass = false;
      result_.counterexample = what;
    }
  }

  bool failed() const { return !result_.pass; }
  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string poly_text(const Poly& p) { return render_plain(p); }

}  // namespace

bool VerifyReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerifyReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

VerifyReport run_verify(const VerifyOptions& options) {
  const unsigned max_n = options.max_n;
  const unsigned max_a = options.max_a;
  const unsigned enum_n = std::min(options.enum_cap, max_n);
  const unsigned needed_cap = stirling_cap_for(max_n, std::max(max_a, 1U));

  const std::shared_ptr<const StirlingTable> table_ptr =
      options.stirling ? options.stirling : shared_stirling_table(needed_cap);
  const StirlingTable& table = *table_ptr;
  if (table.cap() < needed_cap) {
    throw std::invalid_argument("Stirling table must reach index " + std::to_string(needed_cap));
  }

  const std::string a_range = "1<=a<=" + std::to_string(max_a);
  VerifyReport report;

  {
    CheckBuilder check("stirling-gf", "1<=k<=n<=" + std::to_string(max_n));
    for (unsigned n = 1; n <= max_n && !check.failed(); ++n) {
      for (unsigned k = 1; k <= n; ++k) {
        if (!stirling2_gf_check(n, k, table)) {
          std::ostringstream os;
          os << "n=" << n << ", k=" << k << ": table gives " << table(n, k).get_str()
             << ", generating function disagrees";
          check.fail(os.str());
          break;
        }
      }
    }
    report.checks.push_back(check.take());
  }

  {
    CheckBuilder check("hockey-stick", "0<=r<=n<=" + std::to_string(max_n));
    for (unsigned n = 0; n <= max_n && !check.failed(); ++n) {
      for (unsigned r = 0; r <= n; ++r) {
        BigInt sum = 0;
        for (unsigned k = r; k <= n; ++k) sum += binomial(k, r);
        if (sum != binomial(n + 1, r + 1)) {
          check.fail("n=" + std::to_string(n) + ", r=" + std::to_string(r));
          break;
        }
      }
    }
    report.checks.push_back(check.take());
  }

  {
    CheckBuilder check("lambda-consistency", "1<=m<=" + std::to_string(max_n) + ", " + a_range);
    for (unsigned a = 1; a <= max_a && !check.failed(); ++a) {
      const LambdaSeq lambda = lambda_seq(a, max_n, table);
      const Series<Poly> g = g_series(a, max_n);
      for (unsigned m = 1; m <= max_n; ++m) {
        const Poly expected = egf_coeff(g, m);
        if (lambda[m] != expected) {
          check.fail("a=" + std::to_string(a) + ", m=" + std::to_string(m) + ": lambda_m = " +
                     poly_text(lambda[m]) + ", m! [t^m] g(t) = " + poly_text(expected));
          break;
        }
      }
    }
    report.checks.push_back(check.take());
  }

  {
    CheckBuilder check("bell-three-way", "0<=k<=n<=" + std::to_string(enum_n) +
                                             " (enum), n<=" + std::to_string(max_n) +
                                             " (rec vs closed), " + a_range);
    for (unsigned a = 1; a <= max_a && !check.failed(); ++a) {
      const LambdaSeq lambda = lambda_seq(a, max_n, table);
      for (unsigned n = 0; n <= max_n && !check.failed(); ++n) {
        for (unsigned k = 0; k <= n; ++k) {
          const Poly rec = bell_rec(n, k, lambda.terms);
          const Poly closed = bell_closed(n, k, a, table);
          const std::string where =
              "a=" + std::to_string(a) + ", n=" + std::to_string(n) + ", k=" + std::to_string(k);
          if (rec != closed) {
            check.fail(where + ": recurrence " + poly_text(rec) + " vs closed form " + poly_text(closed));
            break;
          }
          if (n <= enum_n) {
            const Poly enumerated = bell_enum(n, k, lambda.terms);
            if (enumerated != rec) {
              check.fail(where + ": enumeration " + poly_text(enumerated) + " vs recurrence " +
                         poly_text(rec));
              break;
            }
          }
        }
      }
    }
    report.checks.push_back(check.take());
  }

  // bell-method rows, reused by the later checks.
  std::vector<std::vector<BernResult>> bell_rows(max_a + 1);
  {
    CheckBuilder check("cross-method", "0<=n<=" + std::to_string(max_n) + ", " + a_range);
    for (unsigned a = 1; a <= max_a; ++a) {
      for (unsigned n = 0; n <= max_n; ++n) {
        BernResult by_bell = bern_bell(n, a, table);
        const BernResult by_sum = bern_doublesum(n, a, table);
        const BernResult by_series = bern_series(n, a);
        if (by_bell.poly != by_sum.poly || by_bell.poly != by_series.poly) {
          check.fail("a=" + std::to_string(a) + ", n=" + std::to_string(n) + ": bell " +
                     poly_text(by_bell.poly) + ", doublesum " + poly_text(by_sum.poly) + ", series " +
                     poly_text(by_series.poly));
        }
        bell_rows[a].push_back(std::move(by_bell));
      }
    }
    report.checks.push_back(check.take());
  }

  {
    CheckBuilder check("egf-product", "order " + std::to_string(max_n) + ", " + a_range);
    for (unsigned a = 1; a <= max_a && !check.failed(); ++a) {
      std::vector<Poly> egf;
      for (unsigned k = 0; k <= max_n; ++k) {
        egf.push_back(bell_rows[a][k].poly.reflected() * Rational(BigInt(1), factorial(k)));
      }
      const Series<Poly> product = Series<Poly>(std::move(egf)) * g_series(a, max_n);
      const Series<Poly> one = Series<Poly>::one(max_n);
      for (unsigned m = 0; m <= max_n; ++m) {
        if (product[m] != one[m]) {
          check.fail("a=" + std::to_string(a) + ": coefficient of t^" + std::to_string(m) + " is " +
                     poly_text(product[m]));
          break;
        }
      }
    }
    report.checks.push_back(check.take());
  }

  {
    CheckBuilder check("structure", "degree n, monic, d/dx B_n = n B_{n-1}; n<=" +
                                        std::to_string(max_n) + ", " + a_range);
    for (unsigned a = 1; a <= max_a && !check.failed(); ++a) {
      for (unsigned n = 0; n <= max_n; ++n) {
        const Poly& p = bell_rows[a][n].poly;
        const std::string where = "a=" + std::to_string(a) + ", n=" + std::to_string(n);
        if (p.degree() != static_cast<long>(n) || p.leading() != Rational(1)) {
          check.fail(where + ": not monic of degree n: " + poly_text(p));
          break;
        }
        if (n >= 1 && p.derivative() != bell_rows[a][n - 1].poly * Rational(n)) {
          check.fail(where + ": derivative identity fails");
          break;
        }
      }
    }
    report.checks.push_back(check.take());
  }

  const std::vector<Rational> numbers = bernoulli_numbers(max_n);
  {
    CheckBuilder check("bernoulli-specialization", "B_n^(1)(0) = B_n, n<=" + std::to_string(max_n));
    for (unsigned n = 0; n <= max_n; ++n) {
      const Rational at_zero = bern_series(n, 1).poly.eval(Rational());
      if (at_zero != numbers[n]) {
        check.fail("n=" + std::to_string(n) + ": series " + at_zero.str() + ", Bell formula " +
                   numbers[n].str());
        break;
      }
    }
    report.checks.push_back(check.take());
  }

  {
    CheckBuilder check("odd-bernoulli", "B_{2k+1} = 0, 3<=2k+1<=" + std::to_string(max_n));
    for (unsigned n = 3; n <= max_n; n += 2) {
      if (!numbers[n].is_zero()) {
        check.fail("n=" + std::to_string(n) + ": B_n = " + numbers[n].str());
        break;
      }
    }
    report.checks.push_back(check.take());
  }

  return report;
}

}  // namespace genbern
