#pragma once

// Exact cover as an integer linear program, for boards too large to branch
// over in-process. The writer emits CPLEX LP format with one binary per
// placement; the reader takes a solver's variable assignment back in and
// turns it into the same result shape solveExact produces.

#include "tilemul/tiling.hpp"

#include <iosfwd>

namespace tilemul {

// Variables are named p<index> after PlacementSet::placements. Constraints:
// one equality per board cell, plus a DSP count bound when DSP tiles exist.
void exportLp(const PlacementSet& set, std::ostream& out);

// Reads lines of "<variable> <value>"; '#' starts a comment. Variables not
// mentioned count as 0, values are rounded to the nearest integer. Throws
// std::runtime_error if the selection is not an exact cover within budget.
SolveResult importSolution(const PlacementSet& set, std::istream& in);

} // namespace tilemul
