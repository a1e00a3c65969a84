#include "analytic/curves.hpp"

#include <algorithm>
#include <cmath>

namespace corridor {

PwlFunction cumulative_of(const PwlFunction& rate, double from, double to) {
    std::vector<double> xs{from};
    for (double x : rate.breakpoints())
        if (x > from && x < to) xs.push_back(x);
    xs.push_back(to);
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<double> ys;
    ys.reserve(xs.size());
    double acc = 0.0;
    ys.push_back(0.0);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        acc += rate.integral(xs[i - 1], xs[i]);
        ys.push_back(acc);
    }
    return PwlFunction(std::move(xs), std::move(ys), PwlFunction::Extrapolation::Clamp);
}

PwlFunction parametric_curve(const PwlFunction& time_map, const PwlFunction& count) {
    std::vector<double> grid = merge_breakpoints(time_map.breakpoints(), count.breakpoints());
    std::vector<double> xs, ys;
    xs.reserve(grid.size());
    ys.reserve(grid.size());
    for (double t : grid) {
        double x = time_map(t);
        double y = count(t);
        if (!xs.empty()) {
            require(x >= xs.back() - 1e-9, ErrorCode::Internal,
                    "curves: time map is not nondecreasing");
            x = std::max(x, xs.back());
            if (x == xs.back() && y == ys.back()) continue;
        }
        xs.push_back(x);
        ys.push_back(y);
    }
    return PwlFunction(std::move(xs), std::move(ys), PwlFunction::Extrapolation::Clamp);
}

namespace {

// Shared assembly: per-origin Lagrangian cumulative counts plus the sigma/tau
// maps produce every curve. For the system optimum sigma and tau coincide.
CumulativeCurves assemble(const CorridorNetwork& net, const std::vector<PwlFunction>& flows,
                          const std::vector<PwlFunction>& sigma,
                          const std::vector<PwlFunction>& tau) {
    const int n = net.size();
    CumulativeCurves out;
    std::vector<PwlFunction> group_count(n);  // cumulative q_i over [0, T]
    for (int i = 0; i < n; ++i) group_count[i] = cumulative_of(flows[i], 0.0, net.horizon);

    PwlFunction through;  // sum over j >= i, built downward
    for (int i = n - 1; i >= 0; --i) {
        through = i == n - 1 ? group_count[i] : through + group_count[i];
        out.departure.insert(out.departure.begin(), parametric_curve(sigma[i], through));
        out.arrival.insert(out.arrival.begin(), parametric_curve(tau[i], through));
    }
    for (int i = 0; i < n; ++i) {
        out.origin_through.push_back(parametric_curve(sigma[i], group_count[i]));
        if (net.direction == Direction::Morning)
            // Lagrangian time is already the destination arrival time
            out.destination_arrival.push_back(PwlFunction(group_count[i].breakpoints(),
                                                          group_count[i].values(),
                                                          PwlFunction::Extrapolation::Clamp));
        else
            out.destination_arrival.push_back(parametric_curve(sigma[i], group_count[i]));
    }
    return out;
}

}  // namespace

CumulativeCurves build_cumulative_curves(const CorridorNetwork& net, const DsoSolution& dso) {
    const int n = net.size();
    std::vector<PwlFunction> sigma, tau;
    for (int i = 0; i < n; ++i) {
        double off = net.direction == Direction::Morning ? -net.free_flow_time[i]
                                                         : net.free_flow_time[i];
        PwlFunction map({0.0, net.horizon}, {off, net.horizon + off},
                        PwlFunction::Extrapolation::Clamp);
        sigma.push_back(map);
        tau.push_back(map);
    }
    return assemble(net, dso.flow, sigma, tau);
}

CumulativeCurves build_cumulative_curves(const CorridorNetwork& net, const DueSolution& due) {
    return assemble(net, due.flow, due.sigma, due.tau);
}

}  // namespace corridor
