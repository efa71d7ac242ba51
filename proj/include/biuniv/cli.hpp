#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biuniv {

// Runs one subcommand (bounds, invert, lift, check, search, corollaries,
// compare). Returns 0 on success, 1 on infeasible/violation findings,
// 2 on usage errors. Output goes to `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biuniv
