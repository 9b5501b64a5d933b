#pragma once

#include <iosfwd>

namespace flood::tools {

/// Exit codes of the flood command.
enum ExitCode : int {
  exit_ok = 0,
  exit_input_error = 1,
  exit_budget = 2,
  exit_invalid = 3,
  exit_internal = 4,
};

/// Entry point of the `flood` command; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flood::tools
