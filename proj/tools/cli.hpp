#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cycflat::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kInputError = 2, kResourceGuard = 3 };

// Runs one cycflat invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cycflat::cli
