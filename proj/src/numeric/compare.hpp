#pragma once

#include <string>

#include "analytic/curves.hpp"
#include "numeric/lcp_solve.hpp"
#include "numeric/lp.hpp"

namespace corridor {

enum class Regime {
    MorningConjectureHolds,   // w = p, same bottleneck departures
    MorningConjectureFails,   // capacity-ratio bound violated, w != p
    EveningConjectureHolds,   // w = p, departures differ, same destination arrivals
    EveningConjectureFails,   // both aggregate and disaggregate flows differ
};

// Gap summary between the closed-form optimum/equilibrium and a numeric
// equilibrium on a grid. Curve gaps are in vehicles, cost and delay gaps in
// cost units sampled at the grid times.
struct ComparisonReport {
    double cost_gap_max = 0.0;
    double delay_price_sup = 0.0;
    double delay_price_l1 = 0.0;
    double departure_curve_sup = 0.0;           // aggregate, worst bottleneck
    double origin_departure_curve_sup = 0.0;    // per-origin departures at the own bottleneck
    double destination_arrival_sup = 0.0;       // per-origin curves at the terminal node
    double grid_delay_tol = 0.0;                // 3 max|sdot| dt
    double grid_curve_tol = 0.0;                // 3 max|sdot| dt mu_max
    Regime regime = Regime::MorningConjectureHolds;
    std::string verdict;
};

ComparisonReport compare_solutions(const CorridorNetwork& net, const ScheduleDelay& s,
                                   const DsoSolution& dso, const LcpProblem& problem,
                                   const LcpSolution& numeric);

// Gap summary between the closed-form optimum and the finite linear program.
struct LpComparison {
    double objective_gap_rel = 0.0;
    double price_gap_sup = 0.0;  // capacity duals vs closed-form prices at grid times
    double mass_gap_rel = 0.0;   // served vs demanded
};

LpComparison compare_lp(const CorridorNetwork& net, const ScheduleDelay& s, const DsoSolution& dso,
                        const DsoLp& lp, const LpSolution& numeric);

// Equilibrium curves reconstructed from a numeric solution through the time
// maps sigma_i = t -/+ (sum of delays below + c_i).
CumulativeCurves curves_from_lcp(const CorridorNetwork& net, const LcpProblem& problem,
                                 const LcpSolution& numeric);

}  // namespace corridor
