#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clusterdenom::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kFailure = 2, kBudget = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clusterdenom::cli
