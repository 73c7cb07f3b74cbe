#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibdim::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInvalidInput = 2,
  kCapExceeded = 3,
};

/// Runs one command line (without the program name). Results go to `out`
/// unless written to a file; diagnostics go to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fibdim::cli
