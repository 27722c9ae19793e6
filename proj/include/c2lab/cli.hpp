#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace c2lab {

// Runs the c2lab command line; args excludes the program name.
// Returns 0 on success, 1 when a check fails, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace c2lab
