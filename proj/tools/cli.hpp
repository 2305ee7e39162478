#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace plasma::cli {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2, kNonConvergence = 3 };

// Runs the command line `args` (without the program name). Normal output goes
// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plasma::cli
