#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starlike::cli {

/// Exit codes shared by every command.
enum Exit : int {
  kHolds = 0,
  kFails = 2,
  kInconclusive = 3,
  kBadInput = 4,
};

/// Runs one command line (args excludes the program name). Results go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace starlike::cli
