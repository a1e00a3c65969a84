#include "pqsim/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "analytic/curves.hpp"

namespace corridor {

namespace {

constexpr double kMassEps = 1e-12;

// FIFO class split: the class departures by time t are the class arrivals of
// whoever is leaving, D_c(t) = A_c(A^-1(D(t))). Exact on the preimage grid.
PwlFunction fifo_class_departures(const PwlFunction& class_arrival, const PwlFunction& total_arrival,
                                  const PwlFunction& total_departure) {
    std::vector<double> grid = total_departure.breakpoints();
    double d_lo = total_departure.values().front(), d_hi = total_departure.values().back();
    auto add_level = [&](double level) {
        if (level <= d_lo || level >= d_hi) return;
        grid.push_back(total_departure.inverse(level));
    };
    for (double x : total_arrival.breakpoints()) add_level(total_arrival(x));
    for (double x : class_arrival.breakpoints()) add_level(total_arrival(x));
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    std::vector<double> xs, ys;
    xs.reserve(grid.size());
    ys.reserve(grid.size());
    for (double t : grid) {
        xs.push_back(t);
        ys.push_back(class_arrival(total_arrival.inverse(total_departure(t))));
    }
    return PwlFunction(std::move(xs), std::move(ys), PwlFunction::Extrapolation::Clamp);
}

}  // namespace

PwlFunction point_queue_departures(const PwlFunction& arrivals, double capacity) {
    require(capacity > 0.0, ErrorCode::InvalidArgument, "pqsim: capacity must be positive");
    const auto& xs = arrivals.breakpoints();
    if (xs.empty()) return arrivals;
    std::vector<double> ox, oy;
    double t = xs.front();
    double d = 0.0;
    ox.push_back(t);
    oy.push_back(d);
    auto emit = [&](double x, double y) {
        if (ox.back() == x && oy.back() == y) return;
        ox.push_back(x);
        oy.push_back(y);
    };
    for (std::size_t j = 0; j + 1 < xs.size(); ++j) {
        double x0 = xs[j], x1 = xs[j + 1];
        if (x0 == x1) continue;
        double a0 = arrivals(x0), a1 = arrivals(x1);
        double lambda = (a1 - a0) / (x1 - x0);
        double seg_start = x0;
        double queue = arrivals(seg_start) - d;
        if (queue <= kMassEps && lambda <= capacity) {
            d = a1;  // free flow: departures track arrivals
            emit(x1, d);
            continue;
        }
        // congested: drain at capacity, maybe clearing inside the segment
        if (queue > kMassEps && lambda < capacity) {
            double clear = seg_start + queue / (capacity - lambda);
            if (clear < x1) {
                d = arrivals(clear);
                emit(clear, d);
                d = a1;
                emit(x1, d);
                continue;
            }
        }
        d += capacity * (x1 - seg_start);
        emit(x1, d);
    }
    double total = arrivals.values().back();
    if (total - d > kMassEps) {  // drain the terminal queue
        emit(xs.back() + (total - d) / capacity, total);
    } else {
        oy.back() = total;
    }
    return PwlFunction(std::move(ox), std::move(oy), PwlFunction::Extrapolation::Clamp);
}

SimulationResult simulate(const CorridorNetwork& net, const InflowProfile& inflows) {
    net.validate();
    const int n = net.size();
    require(static_cast<int>(inflows.cumulative.size()) == n, ErrorCode::InvalidArgument,
            "pqsim: one inflow curve per class required");
    for (const auto& f : inflows.cumulative)
        require(f.empty() || f.is_nondecreasing(1e-9), ErrorCode::InvalidArgument,
                "pqsim: cumulative inflows must be nondecreasing");

    SimulationResult res;
    res.net = net;
    res.inflows = inflows;
    res.arrival_total.resize(n);
    res.departure_total.resize(n);
    res.delay.resize(n);
    res.class_arrival.assign(n, std::vector<PwlFunction>(n));
    res.class_departure.assign(n, std::vector<PwlFunction>(n));
    res.terminal_arrival.resize(n);

    auto link = [&](int b) {  // free-flow time of the link ending at bottleneck b
        return b == 0 ? net.free_flow_time[0]
                      : net.free_flow_time[b] - net.free_flow_time[b - 1];
    };

    auto process = [&](int b, std::vector<PwlFunction>& carried) {
        PwlFunction total;
        for (int c = 0; c < n; ++c) {
            if (carried[c].empty()) continue;
            res.class_arrival[b][c] = carried[c];
            total = total.empty() ? carried[c] : total + carried[c];
        }
        if (total.empty()) {
            res.departure_total[b] = total;
            res.arrival_total[b] = total;
            return;
        }
        res.arrival_total[b] = total;
        PwlFunction dep = point_queue_departures(total, net.capacity[b]);
        res.departure_total[b] = dep;
        res.delay[b] = (res.arrival_total[b] - dep).scaled(1.0 / net.capacity[b]).clipped_below(0.0);
        for (int c = 0; c < n; ++c) {
            if (res.class_arrival[b][c].empty()) continue;
            res.class_departure[b][c] = fifo_class_departures(res.class_arrival[b][c], total, dep);
        }
        for (int c = 0; c < n; ++c) carried[c] = res.class_departure[b][c];
    };

    std::vector<PwlFunction> carried(n);
    if (net.direction == Direction::Morning) {
        for (int b = n - 1; b >= 0; --b) {
            for (int c = 0; c < n; ++c)
                if (!carried[c].empty() && b + 1 < n) carried[c] = carried[c].shifted(link(b + 1));
            if (!inflows.cumulative[b].empty()) carried[b] = inflows.cumulative[b];
            process(b, carried);
        }
        for (int c = 0; c < n; ++c)
            if (!carried[c].empty())
                res.terminal_arrival[c] = carried[c].shifted(net.free_flow_time[0]);
    } else {
        for (int c = 0; c < n; ++c)
            if (!inflows.cumulative[c].empty())
                carried[c] = inflows.cumulative[c].shifted(link(0));
        for (int b = 0; b < n; ++b) {
            process(b, carried);
            res.terminal_arrival[b] = res.class_departure[b][b];
            carried[b] = PwlFunction();  // class b exits at destination b
            if (b + 1 < n)
                for (int c = 0; c < n; ++c)
                    if (!carried[c].empty()) carried[c] = carried[c].shifted(link(b + 1));
        }
    }
    return res;
}

double SimulationResult::terminal_time(int origin, double depart) const {
    const int n = net.size();
    auto wait = [&](int b, double t) {
        if (delay[b].empty()) return 0.0;
        return std::max(0.0, delay[b](t));
    };
    double t = depart;
    if (net.direction == Direction::Morning) {
        for (int b = origin; b >= 0; --b) {
            t += wait(b, t);
            t += b == 0 ? net.free_flow_time[0]
                        : net.free_flow_time[b] - net.free_flow_time[b - 1];
        }
    } else {
        t += net.free_flow_time[0];
        for (int b = 0; b <= origin; ++b) {
            t += wait(b, t);
            if (b < origin) t += net.free_flow_time[b + 1] - net.free_flow_time[b];
        }
    }
    return t;
}

double SimulationResult::cost(int origin, double depart, const ScheduleDelay& s) const {
    double arrive = terminal_time(origin, depart);
    double penalty =
        net.direction == Direction::Morning ? s.eval(arrive) : s.eval(depart);
    return penalty + (arrive - depart);
}

InflowProfile inflows_from_due(const CorridorNetwork& net, const DueSolution& due) {
    InflowProfile out;
    for (int i = 0; i < net.size(); ++i) {
        PwlFunction mass = cumulative_of(due.flow[i], 0.0, net.horizon);
        if (net.direction == Direction::Morning)
            out.cumulative.push_back(parametric_curve(due.tau[i], mass));
        else
            out.cumulative.push_back(mass);
    }
    return out;
}

InflowProfile inflows_from_dso(const CorridorNetwork& net, const DsoSolution& dso) {
    InflowProfile out;
    for (int i = 0; i < net.size(); ++i) {
        PwlFunction mass = cumulative_of(dso.flow[i], 0.0, net.horizon);
        if (net.direction == Direction::Morning)
            out.cumulative.push_back(mass.shifted(-net.free_flow_time[i]));
        else
            out.cumulative.push_back(mass);
    }
    return out;
}

}  // namespace corridor
