#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prvkit::cli {

enum ExitCode : int { kOk = 0, kPropertyFailed = 1, kUsage = 2 };

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prvkit::cli
