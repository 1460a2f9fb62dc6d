#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wciforge {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,
  kExitInputError = 2,
  kExitInternal = 3,
  kExitUndecided = 4,
};

struct CliStreams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::optional<std::string> caps_env;  // value of WCIFORGE_CAPS, if set
};

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, const CliStreams& io);

}  // namespace wciforge
