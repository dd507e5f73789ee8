#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "genbern/combinatorics.hpp"

namespace genbern {

struct CheckResult {
  std::string name;
  std::string range;
  bool pass = true;
  std::optional<std::string> counterexample;  // first failure, if any
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool overall() const;
  /// Nullptr when every check passed.
  const CheckResult* first_failure() const;
};

struct VerifyOptions {
  unsigned max_n = 20;
  unsigned max_a = 4;
  unsigned enum_cap = 10;
  /// Stirling table used by every check; the shared table when null. Must
  /// reach index stirling_cap_for(max_n, max_a).
  std::shared_ptr<const StirlingTable> stirling;
};

/// Runs the identity suite in a fixed order:
///   stirling-gf, hockey-stick, lambda-consistency, bell-three-way,
///   cross-method, egf-product, structure, bernoulli-specialization,
///   odd-bernoulli.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace genbern
