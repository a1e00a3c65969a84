#include "analytic/due.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace corridor {

namespace {

// Open subintervals of (a, b) split at schedule kinks, each with its slope.
struct Piece {
    double begin, end, slope;
};

std::vector<Piece> slope_pieces(const ScheduleDelay& s, double a, double b) {
    std::vector<Piece> out;
    if (b <= a) return out;
    std::vector<double> cuts{a};
    for (double k : s.kinks_in(a, b)) cuts.push_back(k);
    cuts.push_back(b);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double mid = 0.5 * (cuts[i] + cuts[i + 1]);
        out.push_back({cuts[i], cuts[i + 1], s.slope(mid, SlopeSide::Auto)});
    }
    return out;
}

void screen_interval(const ScheduleDelay& s, double a, double b, int bottleneck,
                     FeasibilityViolation::Kind kind, double bound, bool upper,
                     FeasibilityReport& report) {
    for (const auto& p : slope_pieces(s, a, b)) {
        bool bad = upper ? p.slope > bound + 1e-12 : p.slope < bound - 1e-12;
        if (!bad) continue;
        report.feasible = false;
        report.violations.push_back({kind, bottleneck, p.begin, p.end, p.slope, bound});
    }
}

// Difference set window_outer \ window_inner as up to two intervals.
std::vector<std::pair<double, double>> difference(const ArrivalWindow& outer,
                                                  const ArrivalWindow& inner) {
    std::vector<std::pair<double, double>> out;
    if (inner.begin > outer.begin) out.push_back({outer.begin, std::min(inner.begin, outer.end)});
    if (inner.end < outer.end) out.push_back({std::max(inner.end, outer.begin), outer.end});
    return out;
}

PwlFunction time_map(const PwlFunction& cumulative_price, double c, double horizon, double sign) {
    // t -> t + sign * (P(t) + c) built directly on merged breakpoints
    std::vector<double> xs{0.0};
    for (double x : cumulative_price.breakpoints())
        if (x > 0.0 && x < horizon) xs.push_back(x);
    xs.push_back(horizon);
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<double> ys;
    ys.reserve(xs.size());
    for (double x : xs) ys.push_back(x + sign * (cumulative_price(x) + c));
    return PwlFunction(std::move(xs), std::move(ys), PwlFunction::Extrapolation::Clamp);
}

}  // namespace

std::string FeasibilityViolation::describe() const {
    std::ostringstream os;
    if (kind == Kind::SlopeLowerBound)
        os << "schedule slope " << slope << " breaches the existence bound " << bound;
    else
        os << "schedule slope " << slope << " breaches the capacity-ratio bound " << bound
           << " at bottleneck " << bottleneck + 1;
    os << " on [" << interval_begin << ", " << interval_end << "]";
    return os.str();
}

FeasibilityReport check_due_feasibility(const CorridorNetwork& net, const ScheduleDelay& s,
                                        const std::vector<ArrivalWindow>& windows,
                                        Direction direction) {
    require(static_cast<int>(windows.size()) == net.size(), ErrorCode::InvalidArgument,
            "feasibility: window/network size mismatch");
    FeasibilityReport report;
    const int n = net.size();
    const auto& outer = windows[n - 1];
    if (direction == Direction::Morning) {
        screen_interval(s, outer.begin, outer.end, n - 1, FeasibilityViolation::Kind::SlopeLowerBound,
                        -1.0, /*upper=*/false, report);
        for (int i = 0; i + 1 < n; ++i) {
            double bound = net.capacity[i] / net.capacity[i + 1] - 1.0;
            ArrivalWindow inner = i > 0 ? windows[i - 1] : ArrivalWindow{windows[i].begin,
                                                                         windows[i].begin};
            for (auto [a, b] : difference(windows[i], inner))
                screen_interval(s, a, b, i, FeasibilityViolation::Kind::CapacityRatio, bound,
                                /*upper=*/true, report);
        }
    } else {
        screen_interval(s, outer.begin, outer.end, n - 1, FeasibilityViolation::Kind::SlopeLowerBound,
                        1.0, /*upper=*/true, report);
        for (int i = 0; i + 1 < n; ++i) {
            double bound = 1.0 - net.capacity[i] / net.capacity[i + 1];
            for (auto [a, b] : difference(windows[i + 1], windows[i]))
                screen_interval(s, a, b, i, FeasibilityViolation::Kind::CapacityRatio, bound,
                                /*upper=*/false, report);
        }
    }
    return report;
}

DueSolution solve_due(const DsoSolution& dso, const CorridorNetwork& net, const ScheduleDelay& s) {
    net.validate();
    require(dso.size() == net.size(), ErrorCode::InvalidArgument,
            "due: solution does not match the network");
    auto feas = check_due_feasibility(net, s, dso.windows, net.direction);
    if (!feas.feasible)
        fail(ErrorCode::Infeasible,
             "due: closed form invalid, " + feas.violations.front().describe() +
                 "; use the numeric complementarity path");

    const int n = net.size();
    DueSolution out;
    out.direction = net.direction;
    out.cost = dso.cost;
    out.delay = dso.price;
    out.windows = dso.windows;

    for (int i = 0; i < n; ++i) {
        const auto& w = dso.windows[i];
        if (w.length() <= 0.0) {
            out.flow.emplace_back();
        } else if (net.direction == Direction::Morning) {
            // (1 + sdot) mu_hat inside the next-lower window, mu_hat - sdot mu_{i+1} outside it
            ArrivalWindow inner = i > 0 ? dso.windows[i - 1] : ArrivalWindow{w.begin, w.begin};
            double mu_next = i + 1 < n ? net.capacity[i + 1] : 0.0;
            std::vector<double> edges{w.begin};
            for (double k : s.kinks_in(w.begin, w.end)) edges.push_back(k);
            if (inner.length() > 0.0) {
                edges.push_back(inner.begin);
                edges.push_back(inner.end);
            }
            edges.push_back(w.end);
            std::sort(edges.begin(), edges.end());
            edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
            std::vector<double> rates;
            for (std::size_t j = 0; j + 1 < edges.size(); ++j) {
                double mid = 0.5 * (edges[j] + edges[j + 1]);
                double sl = s.slope(mid, SlopeSide::Auto);
                bool in_inner = inner.length() > 0.0 && inner.contains(mid);
                double rate = in_inner ? (1.0 + sl) * dso.merged_capacity[i]
                                       : dso.merged_capacity[i] - sl * mu_next;
                rates.push_back(std::max(rate, 0.0));
            }
            out.flow.push_back(PwlFunction::step(edges, rates));
        } else {
            // evening: (1 - sdot) mu_hat across the whole window
            std::vector<double> edges{w.begin};
            for (double k : s.kinks_in(w.begin, w.end)) edges.push_back(k);
            edges.push_back(w.end);
            std::vector<double> rates;
            for (std::size_t j = 0; j + 1 < edges.size(); ++j) {
                double mid = 0.5 * (edges[j] + edges[j + 1]);
                rates.push_back(
                    std::max((1.0 - s.slope(mid, SlopeSide::Auto)) * dso.merged_capacity[i], 0.0));
            }
            out.flow.push_back(PwlFunction::step(edges, rates));
        }
    }

    double sign = net.direction == Direction::Morning ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) {
        PwlFunction below = i > 0 ? dso.cumulative_price[i - 1] : PwlFunction();
        const PwlFunction& upto = dso.cumulative_price[i];
        if (net.direction == Direction::Morning) {
            // sigma_i = t - P_{i-1}(t) - c_i, tau_i = t - P_i(t) - c_i
            out.sigma.push_back(time_map(below, net.free_flow_time[i], net.horizon, sign));
            out.tau.push_back(time_map(upto, net.free_flow_time[i], net.horizon, sign));
        } else {
            // sigma_i = t + P_i(t) + c_i, tau_i = t + P_{i-1}(t) + c_i
            out.sigma.push_back(time_map(upto, net.free_flow_time[i], net.horizon, sign));
            out.tau.push_back(time_map(below, net.free_flow_time[i], net.horizon, sign));
        }
    }
    return out;
}

PwlFunction evening_bottleneck_departure(const DueSolution& due, const CorridorNetwork& net,
                                         const ScheduleDelay& s, int bottleneck) {
    require(due.direction == Direction::Evening, ErrorCode::InvalidArgument,
            "bottleneck departure profile is an evening construct");
    const int n = net.size();
    const auto& w = due.windows[bottleneck];
    std::vector<std::pair<std::pair<double, double>, double>> segments;
    auto append = [&](double a, double b, bool tilted, double mu) {
        for (const auto& p : slope_pieces(s, a, b))
            segments.push_back({{p.begin, p.end}, tilted ? (1.0 - p.slope) * mu : mu});
    };
    if (bottleneck + 1 < n) {
        const auto& outer = due.windows[bottleneck + 1];
        if (outer.begin < w.begin) append(outer.begin, w.begin, true, net.capacity[bottleneck + 1]);
        append(w.begin, w.end, false, net.capacity[bottleneck]);
        if (outer.end > w.end) append(w.end, outer.end, true, net.capacity[bottleneck + 1]);
    } else {
        append(w.begin, w.end, false, net.capacity[bottleneck]);
    }
    if (segments.empty()) return PwlFunction();
    std::vector<double> edges{segments.front().first.first};
    std::vector<double> rates;
    for (const auto& seg : segments) {
        edges.push_back(seg.first.second);
        rates.push_back(seg.second);
    }
    return PwlFunction::step(edges, rates);
}

}  // namespace corridor
