#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "posetcode/poset.hpp"

namespace posetcode::cli {

enum ExitCode : int { ok = 0, mismatch = 2, guard_violation = 3, input_error = 4 };

// Runs the command line `args` (without the program name), writing reports to
// `out` (or the --out file) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Parses a compact poset spec: chain:N, antichain:N, shrub:N, tree:P1,P2,...
// (0 marks the root) or a path to a poset JSON file.
Poset parse_poset_spec(const std::string& spec);

}  // namespace posetcode::cli
