#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bakerlab::cli {

enum ExitCode : int { kOk = 0, kFail = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name). Reports and
/// summaries go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "4", "1..8" or "2,4,6" -> list of N. Throws std::invalid_argument.
std::vector<int> parse_n_list(const std::string& text);

}  // namespace bakerlab::cli
