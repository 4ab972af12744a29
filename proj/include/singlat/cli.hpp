#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace singlat::cli {

// Runs one subcommand. args excludes the program name. Returns the exit code:
// 0 success, 1 usage error, 2 domain error, 3 consistency failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace singlat::cli
