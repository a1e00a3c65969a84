#pragma once

#include "analytic/due.hpp"

namespace corridor {

// Cumulative arrival and departure curves in Eulerian (wall-clock) time.
// Aggregate curves per bottleneck, origin-level departure curves at the
// origin's own bottleneck, and per-group curves at the shared node.
struct CumulativeCurves {
    std::vector<PwlFunction> arrival;              // A_i at bottleneck i
    std::vector<PwlFunction> departure;            // D_i at bottleneck i
    std::vector<PwlFunction> origin_through;       // group i's departures from bottleneck i
    std::vector<PwlFunction> destination_arrival;  // group i's arrivals at its terminal node

    int size() const { return static_cast<int>(arrival.size()); }
};

// System-optimum curves: no queues, so arrivals equal departures everywhere.
CumulativeCurves build_cumulative_curves(const CorridorNetwork& net, const DsoSolution& dso);

// Equilibrium curves: departures shifted to Eulerian time through the sigma
// maps, arrivals offset horizontally by the queuing delay.
CumulativeCurves build_cumulative_curves(const CorridorNetwork& net, const DueSolution& due);

// Cumulative mass of a piecewise-constant rate profile, clamped outside.
PwlFunction cumulative_of(const PwlFunction& rate, double from, double to);

// Curve {(time_map(t), count(t))} for a nondecreasing piecewise-linear map.
PwlFunction parametric_curve(const PwlFunction& time_map, const PwlFunction& count);

}  // namespace corridor
