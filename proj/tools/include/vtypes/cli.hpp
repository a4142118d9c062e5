#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vtypes {

enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitUsage = 2, kExitSelector = 3 };

/// Runs one `vtypes` invocation; args excludes the program name.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace vtypes
