#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace acs::cli {

enum ExitCode : int { kOk = 0, kViolated = 1, kUsage = 2, kInconclusive = 3 };

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace acs::cli
