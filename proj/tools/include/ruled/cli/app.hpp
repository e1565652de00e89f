#ifndef RULED_CLI_APP_HPP
#define RULED_CLI_APP_HPP

#include <ostream>

namespace ruled::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsageError = 2 };

/// Entry point of the `ruled` tool. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ruled::cli

#endif  // RULED_CLI_APP_HPP
