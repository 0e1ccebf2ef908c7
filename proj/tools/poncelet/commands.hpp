#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace poncelet::cli {

/// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or validation error.
enum Exit : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs `poncelet <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace poncelet::cli
