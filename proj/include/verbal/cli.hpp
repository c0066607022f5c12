#ifndef VERBAL_CLI_HPP
#define VERBAL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace verbal {

// Runs the command-line front end.  Exit codes: 0 success, 1 verification
// failure, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace verbal

#endif
