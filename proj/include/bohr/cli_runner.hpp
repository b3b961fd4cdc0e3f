#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bohr::cli {

/// Runs the command line given by args (without the program name), writing
/// data to out and diagnostics to err.  Exit codes: 0 success, 2 usage error,
/// 3 numeric/solver failure, 4 verification failure.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace bohr::cli
