// Command line front end. Every subcommand is callable in process through
// run_cli, which is how the tests drive it; the installed binary is a thin
// wrapper. Exit codes: 0 success, 1 semantic failure (solver gave up, tree
// invalid, inconsistent declarations), 2 malformed input or bad usage.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dectab {

// args excludes the program name. Diagnostics go to err, results to out.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace dectab
