#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polypi::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2, kInconclusive = 3 };

/// Runs one command line (without the program name). Reports go to `out`
/// (or --output), diagnostics to `err`.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polypi::cli
