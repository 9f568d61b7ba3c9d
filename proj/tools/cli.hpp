#ifndef BRATTELI_TOOLS_CLI_HPP
#define BRATTELI_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bratteli::cli {

/// Runs one command line (program name excluded). Returns 0 when every
/// check passes, 1 when a verification fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bratteli::cli

#endif  // BRATTELI_TOOLS_CLI_HPP
