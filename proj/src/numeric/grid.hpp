#pragma once

#include "core/errors.hpp"

namespace corridor {

// Uniform discretization of [0, T] into K cells; samples sit at the right
// cell edges t_k = k * dt, matching the first-row convention of the backward
// difference operator.
struct TimeGrid {
    int steps = 0;
    double dt = 0.0;

    static TimeGrid over(double horizon, int steps) {
        require(steps >= 2, ErrorCode::InvalidArgument, "grid: need at least two cells");
        require(horizon > 0.0, ErrorCode::InvalidArgument, "grid: empty horizon");
        return {steps, horizon / steps};
    }

    double horizon() const { return steps * dt; }
    double time(int k) const { return (k + 1) * dt; }  // k in [0, steps)
};

}  // namespace corridor
