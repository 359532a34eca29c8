#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace knotpoly {

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out`; diagnostics go to `err` as lines starting "knotpoly: error[<kind>]:".
/// Returns 0 on success, 1 on invalid input and 2 on internal errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotpoly
