#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lmc {

// Exit codes of the command-line tool.
enum exit_code : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_parse = 2,
    exit_infeasible = 3,
};

// Runs one CLI invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lmc
