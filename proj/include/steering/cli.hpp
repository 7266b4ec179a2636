#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace steering::cli {

// Dispatches one command line (without the program name) and writes the
// result document to out. Returns the process exit code:
//   0  success / certification passed
//   1  certification failures
//   2  bad arguments or malformed input files
//   3  constraint violations in otherwise well-formed inputs
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steering::cli
