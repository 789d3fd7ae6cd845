#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace chase::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2, kInfeasible = 3 };

/// Runs one command line (without the program name). Files named by
/// --output / --report / --dump are written directly; everything else goes
/// to `out` and diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace chase::cli
