#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace knights::cli {

// argv-style arguments without the program name; returns the process exit code
// (0 success, 1 no solution or predicate false, 2 budget exceeded, 3 bad input)
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace knights::cli
