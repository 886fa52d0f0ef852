#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace hirsch {

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 on domain errors
/// (bad input, infeasible, not pointed, out-of-range parameters) and 2 on
/// usage errors.
int execute(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hirsch
