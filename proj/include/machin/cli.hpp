#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace machin {

// Command-line entry point without the program name. Exit codes: 0 success,
// 1 invalid or failing formula, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace machin
