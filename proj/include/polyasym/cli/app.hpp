#ifndef POLYASYM_CLI_APP_HPP
#define POLYASYM_CLI_APP_HPP

#include <ostream>

namespace polyasym::cli
{

// Exit status of the command-line tool.
enum ExitCode : int
{
    exit_ok = 0,
    exit_usage = 2,
    exit_domain = 3,
    exit_io = 4
};

// Runs the tool; output goes to out unless --out is given, diagnostics to err.
int run_app(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace polyasym::cli

#endif
