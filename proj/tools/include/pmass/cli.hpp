#pragma once

#include <ostream>

namespace pmass::cli {

/// Exit codes: 0 success, 1 invalid parameters or usage, 2 a failed internal
/// identity check.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIdentity = 2;

/// Parses argv (argv[0] is the program name), runs one subcommand and writes
/// the report to out and diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pmass::cli
