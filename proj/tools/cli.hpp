#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace webkup {

// Runs the webkup command line; returns 0 on success, 1 when a verification
// fails and 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace webkup
