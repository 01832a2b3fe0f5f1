#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tsgraph::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kSemantic = 3, kBudget = 4 };

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tsgraph::cli
