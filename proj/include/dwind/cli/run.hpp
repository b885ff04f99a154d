#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dwind::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 2 on invalid input and 1 when an internal check fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dwind::cli
