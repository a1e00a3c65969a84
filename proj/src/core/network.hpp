#pragma once

#include <vector>

#include "core/errors.hpp"

namespace corridor {

enum class Direction { Morning, Evening };

// Destination arrival (morning) / origin departure (evening) time window of
// one commuter group.
struct ArrivalWindow {
    double begin = 0.0;
    double end = 0.0;
    double length() const { return end - begin; }
    bool contains(double t) const { return begin <= t && t <= end; }
};

// Corridor of N tandem bottlenecks. Index 0 is the bottleneck adjacent to the
// shared node: the single destination for the morning commute, the single
// origin for the evening commute. Capacities mu, free-flow times c (measured
// from location i to the shared node, nondecreasing in i) and group demands Q
// live over the horizon [0, T].
struct CorridorNetwork {
    std::vector<double> capacity;
    std::vector<double> free_flow_time;
    std::vector<double> demand;
    double horizon = 0.0;
    Direction direction = Direction::Morning;

    int size() const { return static_cast<int>(capacity.size()); }

    void validate() const {
        require(!capacity.empty(), ErrorCode::InvalidArgument, "network: no bottlenecks");
        require(free_flow_time.size() == capacity.size() && demand.size() == capacity.size(),
                ErrorCode::InvalidArgument, "network: mismatched vector lengths");
        require(horizon > 0.0, ErrorCode::InvalidArgument, "network: horizon must be positive");
        for (int i = 0; i < size(); ++i) {
            require(capacity[i] > 0.0, ErrorCode::InvalidArgument, "network: capacity must be positive");
            require(demand[i] >= 0.0, ErrorCode::InvalidArgument, "network: negative demand");
            if (i > 0)
                require(free_flow_time[i] >= free_flow_time[i - 1], ErrorCode::InvalidArgument,
                        "network: free-flow times must be nondecreasing outward");
            else
                require(free_flow_time[i] >= 0.0, ErrorCode::InvalidArgument,
                        "network: negative free-flow time");
        }
    }

    double total_demand() const {
        double q = 0.0;
        for (double v : demand) q += v;
        return q;
    }
};

}  // namespace corridor
