#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace landspec::cli {

/// Process exit codes.
enum Exit : int {
    ok = 0,
    bad_input = 1,      ///< usage, parse or I/O error
    no_equilibrium = 2,
    assumption = 3,     ///< assumption violated or domain error
    check_failed = 4,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace landspec::cli
