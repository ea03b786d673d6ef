#pragma once

#include <iosfwd>

namespace equicolor::cli {

inline constexpr const char* kSchemaVersion = "1";

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kOracleBudget = 3,
  kNotColorable = 4,
  kInvariantFalsified = 5,
};

/// Runs the command line. Envelopes and tables go to `out`, diagnostics to `err`.
/// The oracle node cap can be overridden with EQUICOLOR_ORACLE_NODE_LIMIT.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace equicolor::cli
