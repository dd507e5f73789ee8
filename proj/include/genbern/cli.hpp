#pragma once

#include <ostream>

#include "genbern/format.hpp"
#include "genbern/verify.hpp"

namespace genbern {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `genbern` tool. Subcommands: bern, table, bernoulli,
/// bell, verify. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs the verification suite and prints one line per check (plain) or the
/// report object (json). Returns kExitOk or kExitVerifyFailed.
int cmd_verify(const VerifyOptions& options, OutputFormat format, std::ostream& out);

}  // namespace genbern
