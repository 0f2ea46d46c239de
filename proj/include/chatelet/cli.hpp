#ifndef CHATELET_CLI_HPP
#define CHATELET_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace chatelet {

// Runs one subcommand. Exit codes: 0 pass, 1 verified failure, 2 usage error,
// 3 inconclusive at the configured depth.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             bool allow_color = false);

}  // namespace chatelet

#endif
