#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace adk::cli {

/// Runs the adk command line. argv excludes the program name. Returns 0 on
/// success, 1 on a domain error and 2 on a usage error.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace adk::cli
