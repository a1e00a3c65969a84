#pragma once

#include <string>
#include <vector>

#include "analytic/dso.hpp"

namespace corridor {

// One slope-bound breach found by the feasibility screen.
struct FeasibilityViolation {
    enum class Kind { SlopeLowerBound, CapacityRatio };
    Kind kind = Kind::SlopeLowerBound;
    int bottleneck = 0;          // 0-based
    double interval_begin = 0.0;
    double interval_end = 0.0;
    double slope = 0.0;          // offending one-sided derivative
    double bound = 0.0;
    std::string describe() const;
};

struct FeasibilityReport {
    bool feasible = true;
    std::vector<FeasibilityViolation> violations;
};

// Slope conditions under which the queue-equals-price construction exists.
// Morning: sdot >= -1 on the widest window and sdot <= mu_i/mu_{i+1} - 1 on
// each window difference set. Evening: sdot <= 1 on the widest window and
// sdot >= 1 - mu_i/mu_{i+1} on each difference set one level out.
FeasibilityReport check_due_feasibility(const CorridorNetwork& net, const ScheduleDelay& s,
                                        const std::vector<ArrivalWindow>& windows,
                                        Direction direction);

// Closed-form user equilibrium built on top of the system optimum: queuing
// delays equal the optimal prices, costs coincide, and the flow profiles
// tilt by the schedule slope.
struct DueSolution {
    Direction direction = Direction::Morning;
    std::vector<double> cost;              // rho_i^E (= DSO rho_i)
    std::vector<PwlFunction> delay;        // w_i^E(t) (= p_i(t))
    std::vector<PwlFunction> flow;         // q_i^E(t), piecewise constant
    std::vector<PwlFunction> sigma;        // bottleneck departure time of the t-commuter
    std::vector<PwlFunction> tau;          // bottleneck arrival time of the t-commuter
    std::vector<ArrivalWindow> windows;    // same windows as the DSO solution

    int size() const { return static_cast<int>(cost.size()); }
};

// Dispatches on net.direction; refuses (ErrorCode::Infeasible, message carries
// the first violation) whenever the feasibility screen fails, because the
// conjectured profiles would go negative or burst a capacity.
DueSolution solve_due(const DsoSolution& dso, const CorridorNetwork& net, const ScheduleDelay& s);

// Evening bottleneck departure rate x_i^E parametrized by origin departure
// time: mu_i on window i, (1 - sdot) mu_{i+1} one window out, else zero.
PwlFunction evening_bottleneck_departure(const DueSolution& due, const CorridorNetwork& net,
                                         const ScheduleDelay& s, int bottleneck);

}  // namespace corridor
