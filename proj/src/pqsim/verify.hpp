#pragma once

#include "core/schedule.hpp"
#include "pqsim/simulate.hpp"

namespace corridor {

// Equilibrium screen over a simulated state: every used departure time of a
// class must carry (near-)equal cost, and no unused time may undercut it.
struct EquilibriumReport {
    bool equilibrium = true;
    double max_spread = 0.0;     // worst within-class used-cost spread
    double max_violation = 0.0;  // worst unused-time cost advantage
    std::vector<double> cost_low, cost_high;  // per class, over used times
    double tolerance = 0.0;
};

EquilibriumReport verify_equilibrium(const SimulationResult& result, const ScheduleDelay& s,
                                     double tolerance);

}  // namespace corridor
