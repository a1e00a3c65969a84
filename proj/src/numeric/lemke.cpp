#include "numeric/lemke.hpp"

#include <cmath>
#include <limits>

namespace corridor {

namespace {

constexpr double kPivotEps = 1e-11;

// One Lemke run on possibly perturbed data. Column ids: 0..n-1 the slacks v,
// n..2n-1 the z variables, 2n the artificial.
LemkeResult run(const Eigen::MatrixXd& m, const Eigen::VectorXd& b, int max_pivots) {
    const int n = static_cast<int>(b.size());
    LemkeResult res;
    res.z = Eigen::VectorXd::Zero(n);
    if (b.minCoeff() >= 0.0) {
        res.solved = true;
        return res;
    }

    // tableau: v - M z - d z0 = b, Gauss-Jordan on [I | -M | -d | b]
    Eigen::MatrixXd t(n, 2 * n + 2);
    t.block(0, 0, n, n) = Eigen::MatrixXd::Identity(n, n);
    t.block(0, n, n, n) = -m;
    t.col(2 * n) = -Eigen::VectorXd::Ones(n);
    t.col(2 * n + 1) = b;

    std::vector<int> basis(n);
    for (int i = 0; i < n; ++i) basis[i] = i;

    int row;
    b.minCoeff(&row);
    int entering = 2 * n;  // artificial comes in first

    auto pivot = [&](int r, int col) {
        t.row(r) /= t(r, col);
        for (int i = 0; i < n; ++i) {
            if (i == r) continue;
            double f = t(i, col);
            if (f != 0.0) t.row(i) -= f * t.row(r);
        }
        basis[r] = col;
    };

    pivot(row, entering);
    int leaving = row;  // row index whose old basic variable left
    int left_var = row; // v_row left

    for (res.pivots = 1; res.pivots < max_pivots; ++res.pivots) {
        entering = left_var < n ? left_var + n : left_var - n;  // complement of what left
        // ratio test over rows with positive column entry
        int r = -1;
        double best = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            double a = t(i, entering);
            if (a <= kPivotEps) continue;
            double ratio = t(i, 2 * n + 1) / a;
            if (ratio < best - 1e-12 || (ratio < best + 1e-12 && (r < 0 || basis[i] == 2 * n ||
                                                                  (basis[r] != 2 * n && basis[i] < basis[r])))) {
                best = ratio;
                r = i;
            }
        }
        if (r < 0) return res;  // secondary ray
        int old_basic = basis[r];
        pivot(r, entering);
        if (old_basic == 2 * n) {  // artificial left: complementary solution found
            res.solved = true;
            for (int i = 0; i < n; ++i)
                if (basis[i] >= n && basis[i] < 2 * n) res.z[basis[i] - n] = t(i, 2 * n + 1);
            return res;
        }
        left_var = old_basic;
    }
    return res;  // pivot budget exhausted
}

// Re-solve the complementary system on the discovered support with the
// original data; clears both the perturbation and accumulated roundoff.
bool polish(const Eigen::MatrixXd& m, const Eigen::VectorXd& b, Eigen::VectorXd& z) {
    const int n = static_cast<int>(b.size());
    std::vector<int> support;
    for (int i = 0; i < n; ++i)
        if (z[i] > 0.0) support.push_back(i);
    if (support.empty()) return b.minCoeff() >= -1e-9;
    Eigen::MatrixXd ms(support.size(), support.size());
    Eigen::VectorXd bs(support.size());
    for (std::size_t a = 0; a < support.size(); ++a) {
        bs[static_cast<int>(a)] = -b[support[a]];
        for (std::size_t c = 0; c < support.size(); ++c)
            ms(static_cast<int>(a), static_cast<int>(c)) = m(support[a], support[c]);
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(ms);
    if (!lu.isInvertible()) return true;  // keep the pivoted iterate
    Eigen::VectorXd zs = lu.solve(bs);
    Eigen::VectorXd candidate = Eigen::VectorXd::Zero(n);
    for (std::size_t a = 0; a < support.size(); ++a) candidate[support[a]] = zs[static_cast<int>(a)];
    if (candidate.minCoeff() < -1e-9) return true;
    Eigen::VectorXd f = m * candidate + b;
    if (f.minCoeff() < -1e-7 * (1.0 + b.cwiseAbs().maxCoeff())) return true;
    z = candidate;
    return true;
}

}  // namespace

LemkeResult lemke(const Eigen::MatrixXd& m, const Eigen::VectorXd& b, int max_pivots) {
    const int n = static_cast<int>(b.size());
    if (max_pivots <= 0) max_pivots = 50 * (n + 2);
    LemkeResult res = run(m, b, max_pivots);
    if (!res.solved) {  // deterministic perturbation against degenerate cycling
        Eigen::VectorXd bp = b;
        double scale = 1.0 + b.cwiseAbs().maxCoeff();
        for (int i = 0; i < n; ++i) bp[i] += 1e-9 * scale * (i + 1) / n;
        res = run(m, bp, max_pivots);
    }
    if (res.solved) polish(m, b, res.z);
    return res;
}

}  // namespace corridor
