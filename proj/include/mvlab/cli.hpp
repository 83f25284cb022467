#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace mvlab::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  kExitCandidate = 2,
  kExitAnomaly = 3,
};

/// Entry point of the mvlab tool. args[0] is the program name. Reports go to
/// --out when given, otherwise to out; diagnostics and summary lines go to
/// err.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mvlab::cli
