#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tropo::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParse = 2,
  kDegenerate = 3,
  kDimension = 4,
  kNonGeneric = 5,
  kUnsupported = 6,
  kGraph = 7,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropo::cli
