#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oegraph {

// Parses and runs one command line (without the program name).  Returns the
// process exit code: 0 on success or PASS, 1 when a verification fails or a
// comparison separates the graphs, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oegraph
