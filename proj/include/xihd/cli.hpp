#pragma once

#include <iosfwd>

namespace xihd {

// Exit statuses of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitIoOrParse = 2,
  kExitDataContract = 3,
};

// Entry point of the `xihd` tool with subcommands test, simulate, xi and
// moments. Never throws; failures are reported on `err` and through the
// returned exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace xihd
