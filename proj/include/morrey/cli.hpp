#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace morrey::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kResourceError = 3,
};

/// Runs the morrey command line. `args` excludes the program name.
/// Subcommands: norm, witness, constant, table.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace morrey::cli
