#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wreath::cli {

// Runs one command line (without the program name). Exit codes: 0 success,
// 1 failed checks (or a negative query result under --strict), 2 usage or
// input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wreath::cli
