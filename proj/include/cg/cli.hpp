#ifndef CG_CLI_HPP_
#define CG_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace cg {

// Runs a cgtool command line; returns the process exit code (0 success,
// 1 domain error, 2 usage error).  Successful output is written to out in
// one piece; errors produce a single diagnostic line on err.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// parse -> serialize -> parse fixpoint check for the three file formats
// (kind is "graph", "dist" or "expert").
bool round_trip(const std::string& text, const std::string& kind);

}  // namespace cg

#endif  // CG_CLI_HPP_
