#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace leash {

// Run the command-line interface on `args` (program name excluded).
// Returns the process exit code: 0 success, 1 verification gap, 2 bad
// input or usage, 3 dimension mismatch between inputs, 4 unexpected error.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace leash
