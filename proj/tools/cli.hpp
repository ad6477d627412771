#ifndef CEQUIV_TOOLS_CLI_HPP
#define CEQUIV_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cequiv::cli {

/// Runs the command line (without the program name). Returns the process
/// exit code; results go to `out` (or --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cequiv::cli

#endif  // CEQUIV_TOOLS_CLI_HPP
