#pragma once

#include <iosfwd>

namespace toric {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitResourceCap = 2;

/// Runs one `toric` command: JSON report on `out`, diagnostics (and the
/// --verbose summary) on `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toric
