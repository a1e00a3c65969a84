#pragma once

#include "analytic/dso.hpp"
#include "reduction/reduce.hpp"

namespace corridor {

// Maps a reduced-network optimum back onto the original corridor. Costs are
// rho_i = (rho_r - c_r) + c_i for every original origin i merged into reduced
// origin r; prices on screened-out bottlenecks are identically zero; merged
// flows use the proportional split q_i = q_r * Q_i / Q_r, which is verified
// against every original capacity. The split is one of many optima whenever a
// merge happened, and the result says so.
DsoSolution disaggregate(const DsoSolution& reduced_solution, const ReducedNetwork& reduction,
                         const CorridorNetwork& original);

}  // namespace corridor
