#include "numeric/lcp_solve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

#include "analytic/dso.hpp"
#include "numeric/lemke.hpp"
#include "reduction/disaggregate.hpp"
#include "reduction/reduce.hpp"

namespace corridor {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct CellShape {
    int n = 0;
    double sign = 0.0;  // -1 morning (strictly lower ladder), +1 evening (full ladder)
    std::vector<double> mu;
    double dt = 0.0;

    bool couples(int row, int col) const {
        return sign < 0.0 ? col < row : col <= row;
    }
};

// Rigid per-cell complementarity subproblem at fixed rho and trailing delays.
struct CellProblem {
    MatrixXd m;
    VectorXd b;
};

CellProblem make_cell(const CellShape& shape, const VectorXd& cost_gap, const VectorXd& w_prev) {
    const int n = shape.n;
    CellProblem cell;
    cell.m = MatrixXd::Zero(2 * n, 2 * n);
    cell.b.resize(2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) cell.m(i, n + j) = 1.0;     // L
        for (int j = i; j < n; ++j) cell.m(n + i, j) = -1.0;     // -L^T
        double drift = 0.0;
        for (int j = 0; j < n; ++j) {
            if (!shape.couples(i, j)) continue;
            cell.m(n + i, n + j) = shape.sign * shape.mu[i];
            drift += w_prev[j];
        }
        cell.b[i] = cost_gap[i];
        cell.b[n + i] = shape.mu[i] * shape.dt - shape.sign * shape.mu[i] * drift;
    }
    return cell;
}

// Support pattern: which q and w entries are allowed to be positive per cell.
struct Support {
    std::vector<uint8_t> q, w;  // steps * n flags
    int n = 0, steps = 0;

    uint8_t& q_at(int k, int i) { return q[static_cast<std::size_t>(k) * n + i]; }
    uint8_t& w_at(int k, int i) { return w[static_cast<std::size_t>(k) * n + i]; }
    uint8_t q_at(int k, int i) const { return q[static_cast<std::size_t>(k) * n + i]; }
    uint8_t w_at(int k, int i) const { return w[static_cast<std::size_t>(k) * n + i]; }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        auto mix = [&](const std::vector<uint8_t>& v) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                h ^= v[i] + i;
                h *= 1099511628211ull;
            }
        };
        mix(q);
        mix(w);
        return h;
    }
};

// Affine representation value = base + coef . rho carried through the sweep.
struct AffineSweepResult {
    bool ok = false;
    MatrixXd served;     // n x (n+1): served mass as affine function of rho
    std::vector<MatrixXd> w_aff;  // per cell, n x (n+1)
    std::vector<MatrixXd> q_aff;
};

AffineSweepResult affine_sweep(const LcpProblem& p, const Support& sup) {
    const int n = p.n_origins();
    const int K = p.grid().steps;
    const double sign = p.direction() == Direction::Morning ? -1.0 : 1.0;
    const auto& mu = p.mu();

    AffineSweepResult res;
    res.w_aff.assign(K, MatrixXd::Zero(n, n + 1));
    res.q_aff.assign(K, MatrixXd::Zero(n, n + 1));
    res.served = MatrixXd::Zero(n, n + 1);

    MatrixXd w_prev = MatrixXd::Zero(n, n + 1);
    std::vector<int> qs, ws;
    for (int k = 0; k < K; ++k) {
        qs.clear();
        ws.clear();
        for (int i = 0; i < n; ++i) {
            if (sup.q_at(k, i)) qs.push_back(i);
            if (sup.w_at(k, i)) ws.push_back(i);
        }
        MatrixXd& w_now = res.w_aff[k];
        MatrixXd& q_now = res.q_aff[k];
        w_now.setZero();
        q_now.setZero();
        const int rows = static_cast<int>(qs.size() + ws.size());
        if (rows > 0) {
            // local unknowns: w on ws then q on qs
            MatrixXd a = MatrixXd::Zero(rows, rows);
            MatrixXd rhs = MatrixXd::Zero(rows, n + 1);
            int r = 0;
            for (int i : qs) {  // sum_{j<=i} w_j = rho_i - s_ki
                for (std::size_t c = 0; c < ws.size(); ++c)
                    if (ws[c] <= i) a(r, static_cast<int>(c)) = 1.0;
                rhs(r, 0) = -p.schedule_cost(k, i);
                rhs(r, 1 + i) = 1.0;
                ++r;
            }
            for (int i : ws) {  // sum_{j>=i} q_j - sign mu_i sum_{couples} w_j = mu_i dt - sign mu_i sum w_prev
                for (std::size_t c = 0; c < qs.size(); ++c)
                    if (qs[c] >= i) a(r, static_cast<int>(ws.size() + c)) = 1.0;
                for (std::size_t c = 0; c < ws.size(); ++c)
                    if (sup.w_at(k, ws[c]) && (p.direction() == Direction::Morning ? ws[c] < i
                                                                                   : ws[c] <= i))
                        a(r, static_cast<int>(c)) -= sign * mu[i];
                rhs.row(r).setZero();
                rhs(r, 0) = mu[i] * p.grid().dt;
                for (int j = 0; j < n; ++j) {
                    bool couple = p.direction() == Direction::Morning ? j < i : j <= i;
                    if (couple) rhs.row(r) -= sign * mu[i] * w_prev.row(j);
                }
                ++r;
            }
            Eigen::FullPivLU<MatrixXd> lu(a);
            if (!lu.isInvertible()) return res;  // res.ok stays false
            MatrixXd sol = lu.solve(rhs);
            for (std::size_t c = 0; c < ws.size(); ++c) w_now.row(ws[c]) = sol.row(static_cast<int>(c));
            for (std::size_t c = 0; c < qs.size(); ++c)
                q_now.row(qs[c]) = sol.row(static_cast<int>(ws.size() + c));
        }
        res.served += q_now;
        w_prev = w_now;
    }
    res.ok = true;
    return res;
}

double scale_of(const VectorXd& b, const VectorXd& x) {
    return 1.0 + b.cwiseAbs().maxCoeff() * x.cwiseAbs().maxCoeff();
}

}  // namespace

PwlFunction LcpSolution::delay_profile(int i) const {
    std::vector<double> xs, ys;
    xs.reserve(steps + 1);
    ys.reserve(steps + 1);
    xs.push_back(0.0);
    ys.push_back(0.0);
    for (int k = 0; k < steps; ++k) {
        xs.push_back((k + 1) * dt);
        ys.push_back(delay(k, i));
    }
    return PwlFunction(std::move(xs), std::move(ys));
}

PwlFunction LcpSolution::rate_profile(int i) const {
    std::vector<double> edges(steps + 1);
    std::vector<double> rates(steps);
    for (int k = 0; k <= steps; ++k) edges[k] = k * dt;
    for (int k = 0; k < steps; ++k) rates[k] = rate(k, i);
    return PwlFunction::step(edges, rates);
}

LcpSolution solve_lcp(const LcpProblem& p, const LcpOptions& opt) {
    const int n = p.n_origins();
    const int K = p.grid().steps;
    const double dt = p.grid().dt;
    const auto& mu = p.mu();
    const auto& demand = p.demand();

    CellShape shape{n, p.direction() == Direction::Morning ? -1.0 : 1.0, mu, dt};

    // -------- stage 1: cost tatonnement on rigid per-cell subproblems --------
    VectorXd rho(n);
    double rho_cap = 0.0;
    for (int k = 0; k < K; ++k)
        for (int i = 0; i < n; ++i) rho_cap = std::max(rho_cap, p.schedule_cost(k, i));
    if (opt.rho_seed >= 0.0) {
        rho.setConstant(opt.rho_seed);
    } else {
        for (int i = 0; i < n; ++i) rho[i] = 0.25 * rho_cap;
    }

    std::vector<VectorXd> w_cells(K, VectorXd::Zero(n)), q_cells(K, VectorXd::Zero(n));
    auto rigid_sweep = [&](const VectorXd& costs) {
        VectorXd served = VectorXd::Zero(n);
        VectorXd w_prev = VectorXd::Zero(n);
        VectorXd gap(n);
        for (int k = 0; k < K; ++k) {
            bool trivial = w_prev.isZero(0.0);
            for (int i = 0; i < n; ++i) {
                gap[i] = p.schedule_cost(k, i) - costs[i];
                if (gap[i] < 0.0) trivial = false;
            }
            if (trivial) {
                w_cells[k].setZero();
                q_cells[k].setZero();
                continue;
            }
            CellProblem cell = make_cell(shape, gap, w_prev);
            LemkeResult lr = lemke(cell.m, cell.b);
            if (!lr.solved) {  // nudge the subproblem; stage 2 re-solves exactly anyway
                MatrixXd reg = cell.m + 1e-7 * MatrixXd::Identity(2 * n, 2 * n);
                lr = lemke(reg, cell.b);
            }
            if (lr.solved) {
                q_cells[k] = lr.z.head(n);
                w_cells[k] = lr.z.tail(n);
            } else {
                q_cells[k].setZero();
                w_cells[k].setZero();
            }
            w_prev = w_cells[k];
            served += q_cells[k];
        }
        return served;
    };

    VectorXd lo = VectorXd::Zero(n);
    VectorXd hi = VectorXd::Constant(n, -1.0);  // unknown
    int outer = 0;
    double quantum = 0.0;
    for (int i = 0; i < n; ++i) quantum = std::max(quantum, mu[i] * dt);
    for (; outer < opt.max_outer; ++outer) {
        VectorXd served = rigid_sweep(rho);
        bool close = true;
        for (int i = 0; i < n; ++i) {
            double miss = served[i] - demand[i];
            if (std::fabs(miss) > 1.2 * quantum) close = false;
            if (miss < 0.0)
                lo[i] = std::max(lo[i], rho[i]);
            else
                hi[i] = hi[i] < 0.0 ? rho[i] : std::min(hi[i], rho[i]);
        }
        if (close && outer > 0) break;
        bool bracketed = true;
        for (int i = 0; i < n; ++i) {
            if (hi[i] < 0.0) {
                rho[i] = std::max(2.0 * rho[i], rho[i] + 0.5 * rho_cap);
                bracketed = false;
            } else if (lo[i] >= hi[i]) {
                rho[i] = hi[i];
            } else {
                rho[i] = 0.5 * (lo[i] + hi[i]);
            }
        }
        (void)bracketed;
    }

    // -------- stage 2: support extraction --------
    Support sup;
    sup.n = n;
    sup.steps = K;
    sup.q.assign(static_cast<std::size_t>(n) * K, 0);
    sup.w.assign(static_cast<std::size_t>(n) * K, 0);
    double theta_q = 1e-7 * quantum;
    double theta_w = 1e-9 * (1.0 + rho.cwiseAbs().maxCoeff());
    for (int k = 0; k < K; ++k)
        for (int i = 0; i < n; ++i) {
            if (q_cells[k][i] > theta_q) sup.q_at(k, i) = 1;
            if (w_cells[k][i] > theta_w) sup.w_at(k, i) = 1;
        }

    // -------- stage 3: exact support solve plus sign repair --------
    const double bnorm = p.rhs().cwiseAbs().maxCoeff();
    const double x_tol = 1e-11 * (1.0 + quantum + rho_cap);
    const double f_tol = opt.feasibility_tol * (1.0 + bnorm);
    std::unordered_set<std::size_t> seen;
    int repair = 0;
    VectorXd x(p.dimension());
    LcpSolution out;
    int stall_breaker = 0;

    for (; repair < opt.max_repair; ++repair) {
        AffineSweepResult sweep = affine_sweep(p, sup);
        bool degenerate = !sweep.ok;
        VectorXd rho_star = VectorXd::Zero(n);
        if (!degenerate) {
            // demand rows close the system; zero-demand origins keep rho = 0
            std::vector<int> act;
            for (int i = 0; i < n; ++i)
                if (demand[i] > 0.0) act.push_back(i);
            const int na = static_cast<int>(act.size());
            MatrixXd g(na, na);
            VectorXd target(na);
            for (int r = 0; r < na; ++r) {
                target[r] = demand[act[r]] - sweep.served(act[r], 0);
                for (int c = 0; c < na; ++c) g(r, c) = sweep.served(act[r], 1 + act[c]);
            }
            Eigen::FullPivLU<MatrixXd> lu(g);
            if (na == 0 || lu.isInvertible()) {
                VectorXd sol = na > 0 ? lu.solve(target).eval() : VectorXd();
                for (int r = 0; r < na; ++r) rho_star[act[r]] = sol[r];
            } else {
                degenerate = true;
            }
        }
        if (degenerate) {
            // drop the weakest supported w (most often a spurious marginal cell)
            bool flipped = false;
            for (int k = 0; k < K && !flipped; ++k)
                for (int i = 0; i < n && !flipped; ++i)
                    if (sup.w_at(k, i) && w_cells[k][i] <= theta_w * 10.0) {
                        sup.w_at(k, i) = 0;
                        flipped = true;
                    }
            require(flipped, ErrorCode::NoConvergence,
                    "lcp: singular support system and no marginal candidates");
            continue;
        }

        VectorXd rho_ext(n + 1);
        rho_ext[0] = 1.0;
        rho_ext.tail(n) = rho_star;
        x.setZero();
        for (int k = 0; k < K; ++k) {
            VectorXd qv = sweep.q_aff[k] * rho_ext;
            VectorXd wv = sweep.w_aff[k] * rho_ext;
            for (int i = 0; i < n; ++i) {
                x[p.index_q(k, i)] = qv[i];
                x[p.index_w(k, i)] = wv[i];
            }
        }
        for (int i = 0; i < n; ++i) x[p.index_rho(i)] = rho_star[i];

        VectorXd f = p.f(x);
        // locate the worst sign violation
        double worst = 0.0;
        int worst_idx = -1;
        bool worst_is_x = false;
        auto consider = [&](int idx, double v, bool is_x) {
            if (v < worst) {
                worst = v;
                worst_idx = idx;
                worst_is_x = is_x;
            }
        };
        for (int k = 0; k < K; ++k)
            for (int i = 0; i < n; ++i) {
                int iq = p.index_q(k, i), iw = p.index_w(k, i);
                if (sup.q_at(k, i))
                    consider(iq, x[iq] < -x_tol ? x[iq] : 0.0, true);
                else
                    consider(iq, f[iq] < -f_tol ? f[iq] / (1.0 + bnorm) : 0.0, false);
                if (sup.w_at(k, i))
                    consider(iw, x[iw] < -x_tol ? x[iw] : 0.0, true);
                else
                    consider(iw, f[iw] < -f_tol ? f[iw] / (1.0 + bnorm) : 0.0, false);
            }

        if (worst_idx < 0) {
            for (int i = 0; i < n; ++i)
                require(rho_star[i] >= -1e-9 * (1.0 + rho_cap), ErrorCode::NoConvergence,
                        "lcp: negative equilibrium cost at certification");
            // certified: clean tiny negatives and report residuals
            for (int t = 0; t < x.size(); ++t)
                if (x[t] < 0.0) x[t] = 0.0;
            f = p.f(x);
            out.x = x;
            out.min_x = x.minCoeff();
            out.min_f = f.minCoeff();
            out.complementarity = 0.0;
            out.complementarity_total = std::fabs(x.dot(f));
            for (int t = 0; t < x.size(); ++t)
                out.complementarity = std::max(out.complementarity, std::fabs(x[t] * f[t]));
            out.outer_iterations = outer;
            out.repair_iterations = repair;
            out.n = n;
            out.steps = K;
            out.dt = dt;
            double scale = scale_of(p.rhs(), x);
            if (out.min_f < -f_tol || out.complementarity > opt.complementarity_tol * scale) {
                std::ostringstream os;
                os << "lcp: certification failed: min F = " << out.min_f
                   << ", max |x f| = " << out.complementarity << ", scale = " << scale;
                fail(ErrorCode::NoConvergence, os.str());
            }
            return out;
        }

        // flip the worst violator
        int body = worst_idx;
        bool is_w_block = body >= n * K && body < 2 * n * K;
        if (body >= n * K) body -= n * K;
        int k = body / n, i = body % n;
        uint8_t& flag = is_w_block ? sup.w_at(k, i) : sup.q_at(k, i);
        flag = worst_is_x ? 0 : 1;

        std::size_t h = sup.hash();
        if (!seen.insert(h).second) {
            // revisited support: break the cycle by also flipping the runner-up
            ++stall_breaker;
            require(stall_breaker < 50, ErrorCode::NoConvergence,
                    "lcp: support repair is cycling");
            double second = 0.0;
            int second_idx = -1;
            bool second_is_x = false;
            for (int kk = 0; kk < K; ++kk)
                for (int ii = 0; ii < n; ++ii) {
                    int iq = p.index_q(kk, ii), iw = p.index_w(kk, ii);
                    for (int idx : {iq, iw}) {
                        if (idx == worst_idx) continue;
                        bool on = idx >= n * K ? sup.w_at(kk, ii) != 0 : sup.q_at(kk, ii) != 0;
                        double v = on ? (x[idx] < -x_tol ? x[idx] : 0.0)
                                      : (f[idx] < -f_tol ? f[idx] / (1.0 + bnorm) : 0.0);
                        if (v < second) {
                            second = v;
                            second_idx = idx;
                            second_is_x = on;
                        }
                    }
                }
            if (second_idx >= 0) {
                int b2 = second_idx;
                bool w2 = b2 >= n * K && b2 < 2 * n * K;
                if (b2 >= n * K) b2 -= n * K;
                uint8_t& flag2 = w2 ? sup.w_at(b2 / n, b2 % n) : sup.q_at(b2 / n, b2 % n);
                flag2 = second_is_x ? 0 : 1;
            }
        }
    }
    fail(ErrorCode::NoConvergence, "lcp: support repair exhausted its budget");
}

}  // namespace corridor
