#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace infodist {

/// Runs the command line given as argv-style tokens (without the program
/// name), writing reports to `out` and diagnostics to `err`.
/// Exit codes: 0 success, 2 usage/config error, 3 optimizer did not
/// converge.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace infodist
