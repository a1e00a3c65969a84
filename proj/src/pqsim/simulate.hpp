#pragma once

#include "analytic/due.hpp"
#include "core/network.hpp"
#include "core/pwl.hpp"

namespace corridor {

// Cumulative departures from each origin in wall-clock time; class i is the
// traffic of origin i (morning) or of destination i (evening).
struct InflowProfile {
    std::vector<PwlFunction> cumulative;
};

// Exact event-driven replay of the corridor's point queues under FIFO. No
// time stepping: every curve stays piecewise linear and every breakpoint is
// processed exactly, so the simulator is sharper than any grid oracle.
struct SimulationResult {
    CorridorNetwork net;
    std::vector<PwlFunction> arrival_total;    // per bottleneck, cumulative
    std::vector<PwlFunction> departure_total;  // per bottleneck, cumulative
    std::vector<PwlFunction> delay;            // (A - D)/mu per bottleneck
    std::vector<std::vector<PwlFunction>> class_arrival;    // [bottleneck][class]
    std::vector<std::vector<PwlFunction>> class_departure;  // [bottleneck][class]
    std::vector<PwlFunction> terminal_arrival;  // per class, cumulative at its terminal node
    InflowProfile inflows;

    // Wall-clock arrival time at the terminal node for a (possibly marginal)
    // class-`origin` commuter departing at `depart`.
    double terminal_time(int origin, double depart) const;
    // Schedule penalty plus door-to-door travel time.
    double cost(int origin, double depart, const ScheduleDelay& s) const;
};

SimulationResult simulate(const CorridorNetwork& net, const InflowProfile& inflows);

// Lagrangian-to-Eulerian conversions feeding the simulator.
InflowProfile inflows_from_due(const CorridorNetwork& net, const DueSolution& due);
InflowProfile inflows_from_dso(const CorridorNetwork& net, const DsoSolution& dso);

// Constant-capacity point queue: departure curve for a cumulative arrival
// curve. Exposed for direct unit checks.
PwlFunction point_queue_departures(const PwlFunction& arrivals, double capacity);

}  // namespace corridor
