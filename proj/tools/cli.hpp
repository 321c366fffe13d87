#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chipoly::cli {

/// Runs the command line tool on args (without the program name), writing
/// results to out and human-readable diagnostics to err. Returns the exit
/// code: 0 success, 1 parse error, 2 domain error, 3 budget exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chipoly::cli
