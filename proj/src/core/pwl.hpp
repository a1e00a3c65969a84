#pragma once

#include <cstddef>
#include <vector>

namespace corridor {

// Piecewise-linear function of time.
//
// Breakpoints are nondecreasing; a repeated abscissa encodes a jump and
// carries the left value followed by the right value. Evaluation is
// right-continuous at jumps. Outside the support the function either
// vanishes (Extrapolation::Zero, the default used for prices, delays and
// flow profiles) or holds its boundary value (Extrapolation::Clamp, used
// for cumulative curves).
//
// Arithmetic merges breakpoint sets, so sums, differences, scalings and
// clipping are exact: no resampling error is introduced anywhere.
class PwlFunction {
public:
    enum class Extrapolation { Zero, Clamp };

    PwlFunction() = default;
    PwlFunction(std::vector<double> xs, std::vector<double> ys,
                Extrapolation mode = Extrapolation::Zero);

    static PwlFunction constant(double x0, double x1, double value,
                                Extrapolation mode = Extrapolation::Zero);
    // Step function: value[i] on (edges[i], edges[i+1]); jumps carried at the edges.
    static PwlFunction step(const std::vector<double>& edges, const std::vector<double>& values);

    bool empty() const { return xs_.empty(); }
    std::size_t size() const { return xs_.size(); }
    double support_begin() const { return xs_.front(); }
    double support_end() const { return xs_.back(); }
    const std::vector<double>& breakpoints() const { return xs_; }
    const std::vector<double>& values() const { return ys_; }
    Extrapolation extrapolation() const { return mode_; }

    double operator()(double t) const;  // right-continuous at jumps
    double value_left(double t) const;  // limit from below
    double value_right(double t) const { return (*this)(t); }

    PwlFunction shifted(double dt) const;         // g(t) = f(t - dt)
    PwlFunction scaled(double a) const;           // a * f
    PwlFunction clipped_below(double floor) const;  // max(f, floor), exact crossing insertion
    PwlFunction restricted(double a, double b) const;  // support cut to [a, b]

    double integral() const;                 // over the support; jumps carry no mass
    double integral(double a, double b) const;
    double max_value() const;
    double min_value() const;
    double max_abs() const { return std::max(max_value(), -min_value()); }

    bool is_nondecreasing(double tol = 0.0) const;
    // Leftmost t with f(t) >= y; requires a nondecreasing function.
    double inverse(double y) const;

    friend PwlFunction operator+(const PwlFunction& a, const PwlFunction& b);
    friend PwlFunction operator-(const PwlFunction& a, const PwlFunction& b);

private:
    static double max(double a, double b) { return a > b ? a : b; }
    std::vector<double> xs_;
    std::vector<double> ys_;
    Extrapolation mode_ = Extrapolation::Zero;
};

// Merged, deduplicated abscissas of both operands (plus implicit support-edge
// jumps under Extrapolation::Zero). Exposed for the profile builders.
std::vector<double> merge_breakpoints(const std::vector<double>& a, const std::vector<double>& b);

// Supremum of |a - b| sampled exactly at every breakpoint of either side
// (both one-sided values) -- exact for piecewise-linear operands.
double sup_distance(const PwlFunction& a, const PwlFunction& b);

}  // namespace corridor
