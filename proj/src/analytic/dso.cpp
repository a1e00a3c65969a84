#include "analytic/dso.hpp"

#include "reduction/reduce.hpp"

namespace corridor {

double DsoSolution::objective(const ScheduleDelay& s, const CorridorNetwork& net) const {
    double total = 0.0;
    for (int i = 0; i < size(); ++i) {
        const auto& f = flow[i];
        if (f.empty()) continue;
        total += integral_of_schedule_times_flow(s, f) + net.free_flow_time[i] * f.integral();
    }
    return total;
}

double integral_of_schedule_times_flow(const ScheduleDelay& s, const PwlFunction& flow) {
    // flow is piecewise constant; integrate s exactly on each run
    const auto& xs = flow.breakpoints();
    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < xs.size(); ++j) {
        double a = xs[j], b = xs[j + 1];
        if (a == b) continue;
        double rate = flow(0.5 * (a + b));
        if (rate == 0.0) continue;
        acc += rate * s.restriction(a, b).integral();
    }
    return acc;
}

DsoSolution solve_dso(const CorridorNetwork& net, const ScheduleDelay& s) {
    net.validate();
    require(is_reduced(net), ErrorCode::NotReduced,
            "dso: network has false bottlenecks; reduce it first");
    require(s.is_piecewise_linear(), ErrorCode::InvalidArgument,
            "dso: closed-form profiles need a piecewise-linear schedule family");

    const int n = net.size();
    DsoSolution out;
    out.direction = net.direction;
    out.merged_capacity.resize(n);
    for (int i = 0; i < n; ++i)
        out.merged_capacity[i] = net.capacity[i] - (i + 1 < n ? net.capacity[i + 1] : 0.0);

    for (int i = 0; i < n; ++i) {
        double len = net.demand[i] / out.merged_capacity[i];
        auto w = s.window_from_length(len, 0.0, net.horizon);
        out.windows.push_back({w.begin, w.end});
        out.cost.push_back(w.penalty + net.free_flow_time[i]);
    }

    for (int i = 0; i < n; ++i) {
        const auto& w = out.windows[i];
        if (w.length() <= 0.0) {
            out.cumulative_price.emplace_back();
            out.price.emplace_back();
            out.flow.emplace_back();
            continue;
        }
        // P_i = rho_i - s(t) - c_i on the whole window (KKT along positive flow)
        PwlFunction cum =
            PwlFunction::constant(w.begin, w.end, out.cost[i] - net.free_flow_time[i]) -
            s.restriction(w.begin, w.end);
        out.cumulative_price.push_back(cum.clipped_below(0.0));
        out.price.push_back(i == 0 ? out.cumulative_price[0]
                                   : out.cumulative_price[i] - out.cumulative_price[i - 1]);
        out.flow.push_back(
            PwlFunction::step({w.begin, w.end}, {out.merged_capacity[i]}));
    }
    return out;
}

}  // namespace corridor
