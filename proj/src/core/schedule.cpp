#include "core/schedule.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace corridor {

ScheduleDelay ScheduleDelay::piecewise_v(double early_slope, double late_slope,
                                         double desired_time) {
    require(early_slope > 0.0 && late_slope > 0.0, ErrorCode::InvalidArgument,
            "schedule: V slopes must be positive");
    ScheduleDelay s;
    s.family_ = Family::V;
    s.early_slope_ = early_slope;
    s.late_slope_ = late_slope;
    s.desired_time_ = desired_time;
    s.domain_begin_ = -std::numeric_limits<double>::infinity();
    s.domain_end_ = std::numeric_limits<double>::infinity();
    return s;
}

ScheduleDelay ScheduleDelay::piecewise_linear(std::vector<double> ts, std::vector<double> values) {
    require(ts.size() >= 3, ErrorCode::InvalidArgument, "schedule: need at least three breakpoints");
    PwlFunction f(std::move(ts), std::move(values), PwlFunction::Extrapolation::Clamp);
    const auto& xs = f.breakpoints();
    const auto& ys = f.values();
    std::size_t arg_min = 0;
    for (std::size_t i = 1; i < ys.size(); ++i) {
        require(xs[i] > xs[i - 1], ErrorCode::InvalidArgument, "schedule: jumps not allowed");
        if (ys[i] < ys[arg_min]) arg_min = i;
    }
    require(arg_min > 0 && arg_min + 1 < ys.size(), ErrorCode::InvalidArgument,
            "schedule: minimum must be interior");
    require(ys[arg_min] >= 0.0, ErrorCode::InvalidArgument, "schedule: negative penalty");
    double prev = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
        double sl = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
        require(sl >= prev, ErrorCode::InvalidArgument, "schedule: not convex-ordered slopes");
        require(sl != 0.0, ErrorCode::InvalidArgument,
                "schedule: flat segment breaks strict quasi-convexity");
        prev = sl;
    }
    ScheduleDelay s;
    s.family_ = Family::Pwl;
    s.desired_time_ = xs[arg_min];
    s.domain_begin_ = xs.front();
    s.domain_end_ = xs.back();
    s.pwl_ = std::move(f);
    return s;
}

ScheduleDelay ScheduleDelay::callable(std::function<double(double)> fn, double desired_time,
                                      double domain_begin, double domain_end,
                                      std::function<double(double, SlopeSide)> slope) {
    require(static_cast<bool>(fn), ErrorCode::InvalidArgument, "schedule: null callable");
    require(domain_begin < desired_time && desired_time < domain_end, ErrorCode::InvalidArgument,
            "schedule: desired time outside domain");
    ScheduleDelay s;
    s.family_ = Family::Callable;
    s.desired_time_ = desired_time;
    s.domain_begin_ = domain_begin;
    s.domain_end_ = domain_end;
    s.fn_ = std::move(fn);
    s.slope_fn_ = std::move(slope);
    return s;
}

double ScheduleDelay::eval(double t) const {
    require(t >= domain_begin_ && t <= domain_end_, ErrorCode::Domain,
            "schedule: evaluation outside domain");
    switch (family_) {
        case Family::V:
            return std::max(early_slope_ * (desired_time_ - t), late_slope_ * (t - desired_time_));
        case Family::Pwl:
            return pwl_(t);
        case Family::Callable:
            return fn_(t);
    }
    return 0.0;
}

double ScheduleDelay::slope(double t, SlopeSide side) const {
    require(t >= domain_begin_ && t <= domain_end_, ErrorCode::Domain,
            "schedule: slope outside domain");
    if (family_ == Family::V) {
        if (t < desired_time_) return -early_slope_;
        if (t > desired_time_) return late_slope_;
        if (side == SlopeSide::Left) return -early_slope_;
        if (side == SlopeSide::Right) return late_slope_;
        fail(ErrorCode::AmbiguousKink, "schedule: undirected slope at the kink");
    }
    if (family_ == Family::Pwl) {
        const auto& xs = pwl_.breakpoints();
        const auto& ys = pwl_.values();
        auto at = std::lower_bound(xs.begin(), xs.end(), t);
        bool on_kink = at != xs.end() && *at == t && at != xs.begin() && (at + 1) != xs.end();
        if (on_kink && side == SlopeSide::Auto)
            fail(ErrorCode::AmbiguousKink, "schedule: undirected slope at a kink");
        double probe = t;
        if (on_kink)
            probe = side == SlopeSide::Left ? t - 1e-12 * (1.0 + std::fabs(t))
                                            : t + 1e-12 * (1.0 + std::fabs(t));
        auto hi = std::upper_bound(xs.begin(), xs.end(), probe);
        std::size_t i = static_cast<std::size_t>(hi - xs.begin());
        if (i == 0) i = 1;
        if (i == xs.size()) i = xs.size() - 1;
        return (ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]);
    }
    if (slope_fn_) return slope_fn_(t, side);
    // central-ish one-sided numerical derivative for plain callables
    double h = 1e-7 * (1.0 + std::fabs(t));
    if (side == SlopeSide::Left) return (fn_(t) - fn_(t - h)) / h;
    if (side == SlopeSide::Right) return (fn_(t + h) - fn_(t)) / h;
    if (std::fabs(t - desired_time_) <= h)
        fail(ErrorCode::AmbiguousKink, "schedule: undirected slope at the kink");
    return (fn_(t + h) - fn_(t - h)) / (2.0 * h);
}

ScheduleDelay::Window ScheduleDelay::window_from_length(double len, double horizon_begin,
                                                        double horizon_end) const {
    require(len >= 0.0, ErrorCode::InvalidArgument, "schedule: negative window length");
    Window w;
    if (family_ == Family::V) {
        w.begin = desired_time_ - late_slope_ * len / (early_slope_ + late_slope_);
        w.end = w.begin + len;
        w.penalty = early_slope_ * late_slope_ * len / (early_slope_ + late_slope_);
    } else {
        w = window_by_bisection(len, horizon_begin, horizon_end);
    }
    require(w.begin >= horizon_begin && w.end <= horizon_end, ErrorCode::Horizon,
            "schedule: window does not fit inside the horizon");
    return w;
}

ScheduleDelay::Window ScheduleDelay::window_by_bisection(double len, double /*horizon_begin*/,
                                                         double /*horizon_end*/) const {
    double lo = std::max(domain_begin_, desired_time_ - len);
    double hi = std::min(desired_time_, domain_end_ - len);
    require(lo <= hi, ErrorCode::Horizon, "schedule: window exceeds the schedule domain");
    auto g = [&](double a) { return eval(a) - eval(a + len); };  // strictly decreasing on [lo, hi]
    require(g(lo) >= -1e-12 && g(hi) <= 1e-12, ErrorCode::Horizon,
            "schedule: no equal-penalty window inside the schedule domain");
    while (hi - lo > 1e-10) {
        double mid = 0.5 * (lo + hi);
        if (g(mid) >= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    Window w;
    w.begin = 0.5 * (lo + hi);
    w.end = w.begin + len;
    w.penalty = 0.5 * (eval(w.begin) + eval(w.end));
    return w;
}

std::vector<double> ScheduleDelay::kinks_in(double a, double b) const {
    std::vector<double> out;
    if (family_ == Family::V) {
        if (a < desired_time_ && desired_time_ < b) out.push_back(desired_time_);
        return out;
    }
    if (family_ == Family::Pwl) {
        for (double x : pwl_.breakpoints())
            if (a < x && x < b) out.push_back(x);
    }
    return out;
}

PwlFunction ScheduleDelay::restriction(double a, double b) const {
    require(is_piecewise_linear(), ErrorCode::InvalidArgument,
            "schedule: exact restriction needs a piecewise-linear family");
    require(a <= b, ErrorCode::InvalidArgument, "schedule: empty restriction");
    std::vector<double> xs{a};
    for (double k : kinks_in(a, b)) xs.push_back(k);
    xs.push_back(b);
    std::vector<double> ys;
    ys.reserve(xs.size());
    for (double x : xs) ys.push_back(eval(x));
    return PwlFunction(std::move(xs), std::move(ys));
}

}  // namespace corridor
