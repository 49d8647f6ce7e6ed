#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace veritas::cli {

// Runs one CLI invocation. args excludes the program name. Returns the exit
// code: 0 success or all checks passed, 1 a verification suite failed, 2 a
// usage or input error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace veritas::cli
