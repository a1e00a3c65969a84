#include "core/pwl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace corridor {

namespace {

bool nearly_equal(double a, double b) { return a == b; }

}  // namespace

PwlFunction::PwlFunction(std::vector<double> xs, std::vector<double> ys, Extrapolation mode)
    : xs_(std::move(xs)), ys_(std::move(ys)), mode_(mode) {
    require(xs_.size() == ys_.size(), ErrorCode::InvalidArgument,
            "pwl: breakpoint/value size mismatch");
    for (std::size_t i = 1; i < xs_.size(); ++i) {
        require(xs_[i] >= xs_[i - 1], ErrorCode::InvalidArgument, "pwl: breakpoints must be sorted");
        if (i >= 2)
            require(xs_[i] > xs_[i - 2], ErrorCode::InvalidArgument,
                    "pwl: abscissa repeated more than twice");
    }
    for (double v : ys_)
        require(std::isfinite(v), ErrorCode::InvalidArgument, "pwl: non-finite value");
}

PwlFunction PwlFunction::constant(double x0, double x1, double value, Extrapolation mode) {
    require(x1 >= x0, ErrorCode::InvalidArgument, "pwl: empty interval");
    return PwlFunction({x0, x1}, {value, value}, mode);
}

PwlFunction PwlFunction::step(const std::vector<double>& edges, const std::vector<double>& values) {
    require(edges.size() == values.size() + 1, ErrorCode::InvalidArgument, "pwl: step shape");
    std::vector<double> xs, ys;
    xs.reserve(2 * values.size());
    ys.reserve(2 * values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!xs.empty() && nearly_equal(ys.back(), values[i])) {
            xs.back() = edges[i + 1];  // extend the run
            continue;
        }
        xs.push_back(edges[i]);  // right twin of an interior jump, or the first edge
        ys.push_back(values[i]);
        xs.push_back(edges[i + 1]);
        ys.push_back(values[i]);
    }
    return PwlFunction(std::move(xs), std::move(ys));
}

double PwlFunction::operator()(double t) const {
    if (xs_.empty()) return 0.0;
    if (t < xs_.front()) return mode_ == Extrapolation::Zero ? 0.0 : ys_.front();
    if (t > xs_.back()) return mode_ == Extrapolation::Zero ? 0.0 : ys_.back();
    auto it = std::upper_bound(xs_.begin(), xs_.end(), t);
    std::size_t i = static_cast<std::size_t>(it - xs_.begin());
    if (i == xs_.size()) return ys_.back();
    if (i == 0) return ys_.front();
    --i;  // xs_[i] <= t < xs_[i+1]
    if (xs_[i] == t) return ys_[i];  // upper_bound already skipped the left twin of a jump
    double w = (t - xs_[i]) / (xs_[i + 1] - xs_[i]);
    return ys_[i] + w * (ys_[i + 1] - ys_[i]);
}

double PwlFunction::value_left(double t) const {
    if (xs_.empty()) return 0.0;
    if (t <= xs_.front()) return mode_ == Extrapolation::Zero ? 0.0 : ys_.front();
    if (t > xs_.back()) return mode_ == Extrapolation::Zero ? 0.0 : ys_.back();
    auto it = std::lower_bound(xs_.begin(), xs_.end(), t);
    std::size_t i = static_cast<std::size_t>(it - xs_.begin());
    if (i < xs_.size() && xs_[i] == t) return ys_[i];  // first twin = left value
    double w = (t - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
    return ys_[i - 1] + w * (ys_[i] - ys_[i - 1]);
}

PwlFunction PwlFunction::shifted(double dt) const {
    std::vector<double> xs(xs_);
    for (double& x : xs) x += dt;
    return PwlFunction(std::move(xs), ys_, mode_);
}

PwlFunction PwlFunction::scaled(double a) const {
    std::vector<double> ys(ys_);
    for (double& y : ys) y *= a;
    return PwlFunction(xs_, std::move(ys), mode_);
}

PwlFunction PwlFunction::clipped_below(double floor) const {
    if (xs_.empty()) return *this;
    std::vector<double> xs, ys;
    xs.reserve(xs_.size() + 4);
    ys.reserve(ys_.size() + 4);
    auto push = [&](double x, double y) {
        if (!xs.empty() && xs.back() == x && ys.back() == y) return;
        xs.push_back(x);
        ys.push_back(y);
    };
    push(xs_.front(), max(ys_.front(), floor));
    for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
        double x0 = xs_[i], x1 = xs_[i + 1], y0 = ys_[i], y1 = ys_[i + 1];
        if (x0 < x1 && (y0 - floor) * (y1 - floor) < 0.0) {
            double tc = x0 + (floor - y0) / (y1 - y0) * (x1 - x0);
            push(tc, floor);
        }
        push(x1, max(y1, floor));
    }
    return PwlFunction(std::move(xs), std::move(ys), mode_);
}

PwlFunction PwlFunction::restricted(double a, double b) const {
    require(a <= b, ErrorCode::InvalidArgument, "pwl: empty restriction");
    if (xs_.empty()) return *this;
    std::vector<double> xs, ys;
    if (a < xs_.front()) a = xs_.front();
    if (b > xs_.back()) b = xs_.back();
    if (a > b) return PwlFunction();
    xs.push_back(a);
    ys.push_back((*this)(a));
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        if (xs_[i] <= a || xs_[i] >= b) continue;
        xs.push_back(xs_[i]);
        ys.push_back(ys_[i]);
    }
    if (b > a) {
        xs.push_back(b);
        ys.push_back(value_left(b));
    }
    return PwlFunction(std::move(xs), std::move(ys), mode_);
}

double PwlFunction::integral() const {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
        acc += 0.5 * (ys_[i] + ys_[i + 1]) * (xs_[i + 1] - xs_[i]);
    return acc;
}

double PwlFunction::integral(double a, double b) const {
    require(b >= a, ErrorCode::InvalidArgument, "pwl: reversed integration bounds");
    if (xs_.empty()) return 0.0;
    double acc = 0.0;
    if (mode_ == Extrapolation::Clamp) {
        if (a < xs_.front()) acc += (std::min(b, xs_.front()) - a) * ys_.front();
        if (b > xs_.back()) acc += (b - std::max(a, xs_.back())) * ys_.back();
    }
    double lo = std::max(a, xs_.front()), hi = std::min(b, xs_.back());
    if (lo >= hi) return acc;
    for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
        double x0 = std::max(xs_[i], lo), x1 = std::min(xs_[i + 1], hi);
        if (x0 >= x1) continue;
        double y0 = xs_[i] == xs_[i + 1] ? ys_[i]
                                         : ys_[i] + (x0 - xs_[i]) / (xs_[i + 1] - xs_[i]) * (ys_[i + 1] - ys_[i]);
        double y1 = xs_[i] == xs_[i + 1] ? ys_[i]
                                         : ys_[i] + (x1 - xs_[i]) / (xs_[i + 1] - xs_[i]) * (ys_[i + 1] - ys_[i]);
        acc += 0.5 * (y0 + y1) * (x1 - x0);
    }
    return acc;
}

double PwlFunction::max_value() const {
    double m = mode_ == Extrapolation::Zero && !xs_.empty() ? 0.0
                                                            : -std::numeric_limits<double>::infinity();
    for (double y : ys_) m = max(m, y);
    return xs_.empty() ? 0.0 : m;
}

double PwlFunction::min_value() const {
    if (xs_.empty()) return 0.0;
    double m = mode_ == Extrapolation::Zero ? 0.0 : std::numeric_limits<double>::infinity();
    for (double y : ys_) m = std::min(m, y);
    return m;
}

bool PwlFunction::is_nondecreasing(double tol) const {
    for (std::size_t i = 1; i < ys_.size(); ++i)
        if (ys_[i] < ys_[i - 1] - tol) return false;
    return true;
}

double PwlFunction::inverse(double y) const {
    require(!xs_.empty(), ErrorCode::Domain, "pwl: inverse of empty function");
    if (y <= ys_.front()) return xs_.front();
    require(y <= ys_.back() + 1e-12 * (1.0 + std::fabs(ys_.back())), ErrorCode::Domain,
            "pwl: inverse target above range");
    if (y >= ys_.back()) return xs_.back();
    auto it = std::lower_bound(ys_.begin(), ys_.end(), y);
    std::size_t i = static_cast<std::size_t>(it - ys_.begin());  // first ys_[i] >= y, i >= 1 here
    if (xs_[i] == xs_[i - 1] || ys_[i] == ys_[i - 1]) return xs_[i];
    return xs_[i - 1] + (y - ys_[i - 1]) / (ys_[i] - ys_[i - 1]) * (xs_[i] - xs_[i - 1]);
}

std::vector<double> merge_breakpoints(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

bool jumps_at(const PwlFunction& f, double x) {
    if (f.empty()) return false;
    const auto& xs = f.breakpoints();
    auto it = std::lower_bound(xs.begin(), xs.end(), x);
    if (it != xs.end() && *it == x && (it + 1) != xs.end() && *(it + 1) == x) return true;
    if (f.extrapolation() == PwlFunction::Extrapolation::Zero) {
        if (x == f.support_begin() && f.values().front() != 0.0) return true;
        if (x == f.support_end() && f.values().back() != 0.0) return true;
    }
    return false;
}

// One-sided limits honouring the implicit jump at a Zero-mode support edge.
double right_limit(const PwlFunction& f, double x) {
    if (!f.empty() && f.extrapolation() == PwlFunction::Extrapolation::Zero &&
        x >= f.support_end())
        return 0.0;
    return f(x);
}

double left_limit(const PwlFunction& f, double x) {
    if (!f.empty() && f.extrapolation() == PwlFunction::Extrapolation::Zero &&
        x <= f.support_begin())
        return 0.0;
    return f.value_left(x);
}

PwlFunction combine(const PwlFunction& a, const PwlFunction& b, double sb) {
    if (a.empty() && b.empty()) return PwlFunction();
    auto mode = (a.extrapolation() == PwlFunction::Extrapolation::Clamp ||
                 b.extrapolation() == PwlFunction::Extrapolation::Clamp)
                    ? PwlFunction::Extrapolation::Clamp
                    : PwlFunction::Extrapolation::Zero;
    std::vector<double> grid = merge_breakpoints(a.breakpoints(), b.breakpoints());
    std::vector<double> xs, ys;
    xs.reserve(2 * grid.size());
    ys.reserve(2 * grid.size());
    for (double x : grid) {
        double l = left_limit(a, x) + sb * left_limit(b, x);
        double r = right_limit(a, x) + sb * right_limit(b, x);
        if (jumps_at(a, x) || jumps_at(b, x)) {
            xs.push_back(x);
            ys.push_back(l);
        }
        xs.push_back(x);
        ys.push_back(r);
    }
    return PwlFunction(std::move(xs), std::move(ys), mode);
}

}  // namespace

PwlFunction operator+(const PwlFunction& a, const PwlFunction& b) { return combine(a, b, 1.0); }
PwlFunction operator-(const PwlFunction& a, const PwlFunction& b) { return combine(a, b, -1.0); }

double sup_distance(const PwlFunction& a, const PwlFunction& b) {
    std::vector<double> grid = merge_breakpoints(a.breakpoints(), b.breakpoints());
    double m = 0.0;
    for (double x : grid) {
        m = std::max(m, std::fabs(a(x) - b(x)));
        m = std::max(m, std::fabs(a.value_left(x) - b.value_left(x)));
    }
    return m;
}

}  // namespace corridor
