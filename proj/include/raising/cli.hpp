#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace raising {

// Runs one command line (without the program name). Returns 0 on success,
// 1 when an identity check fails and 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace raising
