#pragma once

#include <iosfwd>

namespace gtrim {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecondition = 3;

/// Runs `gtrim` with the given arguments (argv[0] is the program name).
/// Normal output goes to `out` unless --out names a file; diagnostics go to
/// `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gtrim
