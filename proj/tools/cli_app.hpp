#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace negacorr::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,          // usage, parse and precondition errors
  kInapplicable = 3,   // construction row does not apply to the prime
  kVerifyFailed = 4,
};

/// Runs the command line `args` (args[0] is the program name). Sequence
/// literals given as "-" are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace negacorr::cli
