#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace seshadri::cli {

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code: 0 success, 1 usage error, 2 verification failure,
/// 3 precision shortfall.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace seshadri::cli
