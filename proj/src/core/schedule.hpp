#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "core/pwl.hpp"

namespace corridor {

enum class SlopeSide { Left, Right, Auto };

// Strictly quasi-convex schedule-delay penalty s(t), piecewise differentiable
// around its desired time. Three families: the two-slope V shape, a general
// piecewise-linear profile, and an externally supplied callable. The V and
// piecewise-linear families expose their kink structure so downstream profile
// builders stay exact; the callable family supports evaluation, one-sided
// slopes and bisection-based window placement only.
class ScheduleDelay {
public:
    struct Window {
        double begin = 0.0;
        double end = 0.0;
        double penalty = 0.0;  // common endpoint value, the s-bar of the window length
        double length() const { return end - begin; }
    };

    static ScheduleDelay piecewise_v(double early_slope, double late_slope, double desired_time);
    static ScheduleDelay piecewise_linear(std::vector<double> ts, std::vector<double> values);
    static ScheduleDelay callable(std::function<double(double)> s, double desired_time,
                                  double domain_begin, double domain_end,
                                  std::function<double(double, SlopeSide)> slope = {});

    double eval(double t) const;
    // One-sided derivative; SlopeSide::Auto at a kink raises an ambiguity error.
    double slope(double t, SlopeSide side = SlopeSide::Auto) const;

    double desired_time() const { return desired_time_; }
    double domain_begin() const { return domain_begin_; }
    double domain_end() const { return domain_end_; }

    // Unique window [t-, t- + len] with equal endpoint penalties, constrained
    // to [horizon_begin, horizon_end]. Closed form for the V family, bisection
    // (1e-10 absolute time tolerance) otherwise.
    Window window_from_length(double len, double horizon_begin, double horizon_end) const;

    bool is_piecewise_linear() const { return family_ != Family::Callable; }
    // Kinks of s strictly inside (a, b); empty for the callable family.
    std::vector<double> kinks_in(double a, double b) const;
    // Exact piecewise-linear restriction to [a, b]; only for the PWL families.
    PwlFunction restriction(double a, double b) const;

private:
    enum class Family { V, Pwl, Callable };
    ScheduleDelay() = default;

    Window window_by_bisection(double len, double horizon_begin, double horizon_end) const;

    Family family_ = Family::V;
    double early_slope_ = 0.0;   // V family: beta > 0
    double late_slope_ = 0.0;    // V family: gamma > 0
    double desired_time_ = 0.0;  // argmin of s
    double domain_begin_ = 0.0;
    double domain_end_ = std::numeric_limits<double>::infinity();
    PwlFunction pwl_;  // PWL family
    std::function<double(double)> fn_;
    std::function<double(double, SlopeSide)> slope_fn_;
};

}  // namespace corridor
