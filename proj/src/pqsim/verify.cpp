#include "pqsim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace corridor {

namespace {

constexpr double kRateEps = 1e-9;

// Interior sample points of every positive-rate run of a cumulative curve.
std::vector<double> used_times(const PwlFunction& cumulative) {
    std::vector<double> out;
    const auto& xs = cumulative.breakpoints();
    const auto& ys = cumulative.values();
    for (std::size_t j = 0; j + 1 < xs.size(); ++j) {
        if (xs[j + 1] <= xs[j]) continue;
        double rate = (ys[j + 1] - ys[j]) / (xs[j + 1] - xs[j]);
        if (rate <= kRateEps) continue;
        double h = xs[j + 1] - xs[j];
        out.push_back(xs[j] + 0.25 * h);
        out.push_back(xs[j] + 0.5 * h);
        out.push_back(xs[j] + 0.75 * h);
    }
    return out;
}

bool in_domain(const ScheduleDelay& s, double t) {
    return t >= s.domain_begin() && t <= s.domain_end();
}

}  // namespace

EquilibriumReport verify_equilibrium(const SimulationResult& sim, const ScheduleDelay& s,
                                     double tolerance) {
    const int n = sim.net.size();
    EquilibriumReport rep;
    rep.tolerance = tolerance;
    rep.cost_low.assign(n, std::numeric_limits<double>::quiet_NaN());
    rep.cost_high.assign(n, std::numeric_limits<double>::quiet_NaN());

    // probe grid: all inflow breakpoints plus a uniform fill of the horizon
    std::vector<double> probes;
    for (int c = 0; c < n; ++c)
        for (double x : sim.inflows.cumulative[c].breakpoints()) probes.push_back(x);
    const int fill = 512;
    for (int j = 0; j <= fill; ++j) probes.push_back(sim.net.horizon * j / fill);
    std::sort(probes.begin(), probes.end());
    probes.erase(std::unique(probes.begin(), probes.end()), probes.end());

    for (int c = 0; c < n; ++c) {
        const auto& inflow = sim.inflows.cumulative[c];
        if (inflow.empty()) continue;  // vacuous class
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (double t : used_times(inflow)) {
            double arrive = sim.terminal_time(c, t);
            double sched = sim.net.direction == Direction::Morning ? arrive : t;
            if (!in_domain(s, sched)) continue;
            double v = sim.cost(c, t, s);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (!std::isfinite(lo)) continue;
        rep.cost_low[c] = lo;
        rep.cost_high[c] = hi;
        rep.max_spread = std::max(rep.max_spread, hi - lo);
        for (double t : probes) {
            double arrive = sim.terminal_time(c, t);
            double sched = sim.net.direction == Direction::Morning ? arrive : t;
            if (!in_domain(s, sched)) continue;
            double v = sim.cost(c, t, s);
            rep.max_violation = std::max(rep.max_violation, lo - v);
        }
    }
    rep.equilibrium = rep.max_spread <= tolerance && rep.max_violation <= tolerance;
    return rep;
}

}  // namespace corridor
