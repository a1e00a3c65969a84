#pragma once

#include <vector>

#include "core/network.hpp"
#include "core/pwl.hpp"
#include "core/schedule.hpp"

namespace corridor {

// Closed-form system optimum of a reduced corridor: nested equal-penalty
// windows, all-or-nothing flows at the merged capacities, and the optimal
// price profiles that support them.
struct DsoSolution {
    Direction direction = Direction::Morning;
    std::vector<ArrivalWindow> windows;      // T_i = Q_i / mu_hat_i
    std::vector<double> cost;                // rho_i = sbar(T_i) + c_i
    std::vector<PwlFunction> price;          // p_i(t), positive strictly inside the window
    std::vector<PwlFunction> cumulative_price;  // P_i = sum_{j<=i} p_j, zero outside window i
    std::vector<PwlFunction> flow;           // q_i(t): mu_hat_i on the window, 0 elsewhere
    std::vector<double> merged_capacity;     // mu_hat
    bool flow_split_unique = true;           // false after disaggregating merged origins

    int size() const { return static_cast<int>(windows.size()); }
    // Total schedule plus free-flow cost of the flow pattern.
    double objective(const ScheduleDelay& s, const CorridorNetwork& net) const;
};

// Prop.-1 solution; requires a reduced network (precondition error otherwise)
// and a piecewise-linear schedule family for the exact profiles. The same
// formulas serve both commute directions.
DsoSolution solve_dso(const CorridorNetwork& net, const ScheduleDelay& s);

// Exact integral of s(t) * flow(t) for a piecewise-constant flow profile.
double integral_of_schedule_times_flow(const ScheduleDelay& s, const PwlFunction& flow);

}  // namespace corridor
