#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cobcoh {

/// Exit statuses of `run`.
enum ExitCode : int {
  kExitEqual = 0,
  kExitNotEqual = 1,
  kExitInconclusive = 2,
  kExitError = 3,
};

/// Command-line driver; `args` excludes the program name. Subcommands:
/// check, normalize, interpret, decompose, render, selftest.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cobcoh
