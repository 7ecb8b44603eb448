#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace asph::cli {

/// Runs one command line (without the program name). Returns the exit
/// status: 0 on success, 1 on a failed computation or check, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asph::cli
