#ifndef DYNGAL_CLI_HPP
#define DYNGAL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

// Command-line front end: subcommand dispatch and JSON/text reporting.
// Exit codes: 0 success (whatever the mathematical verdict), 1 failed
// --assert-surjective, 2 parse error, 3 domain error.

namespace dyngal::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dyngal::cli

#endif
