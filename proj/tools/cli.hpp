#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coloreul::cli {

enum ExitCode : int { kPass = 0, kUsage = 1, kCap = 2, kVerificationFailed = 3 };

/// Runs the command line `args` (program name excluded) and returns the exit
/// code. Results go to `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "0..3", "1,4,5" or a single value.
std::vector<int> parse_range(const std::string& text);

}  // namespace coloreul::cli
