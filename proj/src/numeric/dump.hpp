#pragma once

#include <string>

#include "numeric/lcp_solve.hpp"

namespace corridor {

// Writes the complementarity data for external cross-checks:
//   M.csv  -- "row,col,value" triplets of the nonzero entries
//   b.csv  -- "index,value"
//   X.csv  -- "index,value" (only when a solution is supplied)
// A "# corridor-csv v1: ..." comment line heads each file; indices are
// 0-based in the [q, w, rho] time-major layout described alongside.
void dump_lcp(const LcpProblem& problem, const LcpSolution* solution, const std::string& directory);

}  // namespace corridor
