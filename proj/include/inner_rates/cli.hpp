#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace inner_rates {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_invalid = 1,  // validation or solver failure
    exit_parse = 2,    // unreadable input or bad command line
};

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace inner_rates
