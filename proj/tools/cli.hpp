#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fracburgers::cli {

enum ExitCode : int {
  ok = 0,
  usage_error = 2,
  numerical_failure = 3,
  no_blowup = 4,
};

/// Runs one subcommand. `args` excludes the program name. Reports and error
/// messages go to `out` / `err`; data files go under --out-dir.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace fracburgers::cli
