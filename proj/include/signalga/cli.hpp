#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace signalga {

/// Exit codes: 0 success, 1 usage/parse/validation error, 2 I/O error.
enum ExitCode : int { kExitOk = 0, kExitInvalid = 1, kExitIo = 2 };

/// Runs the command line. `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace signalga
