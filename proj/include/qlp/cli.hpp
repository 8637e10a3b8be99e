#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qlp {

inline constexpr const char* version_string = "qlpbound 0.1.0";

// Exit codes shared by every subcommand.
enum ExitCode : int {
    exit_ok = 0,       // success / feasible / valid
    exit_negative = 1, // infeasible / invalid certificate / audit failure
    exit_error = 2,    // usage, parse, parameter or limit errors
};

// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qlp
