#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biquad::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,          // success, every check in the payload passed
  kFailed = 1,      // a verification failed
  kBadInput = 2,    // unparseable, invalid or degenerate input
};

/// Runs one command line (args[0] is the program name). Machine-readable
/// output goes to `out`, human-oriented notes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biquad::cli
