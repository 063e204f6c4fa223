#pragma once

// The pcg command line: check, family, graph, nice.

#include <ostream>
#include <string>
#include <vector>

namespace pcg::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,     // bad arguments or unparseable spec
  kCap = 3,       // element cap exceeded
  kConflict = 4,  // brute and criterion routes disagree
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcg::cli
