#include "numeric/lp.hpp"

#include <algorithm>
#include <cmath>

namespace corridor {

DsoLp build_dso_lp(const CorridorNetwork& net, const ScheduleDelay& s, const TimeGrid& grid) {
    net.validate();
    require(std::fabs(grid.horizon() - net.horizon) <= 1e-9 * (1.0 + net.horizon),
            ErrorCode::InvalidArgument, "lp: grid horizon does not match the network");
    DsoLp lp;
    lp.grid = grid;
    lp.n_origins = net.size();
    lp.mu = net.capacity;
    lp.demand = net.demand;
    lp.free_flow = net.free_flow_time;
    lp.schedule_sample.resize(grid.steps);
    for (int k = 0; k < grid.steps; ++k) lp.schedule_sample[k] = s.eval(grid.time(k));
    return lp;
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// One interior-point iterate of the slack-extended program.
struct Iterate {
    VectorXd q, u;      // primal: rates and capacity slacks, both length K*N
    VectorXd yc, yd;    // duals of capacity and demand rows
    VectorXd zq, zu;    // reduced costs
};

struct Residuals {
    VectorXd cap, dem;  // primal
    VectorXd dq, du;    // dual
};

}  // namespace

LpSolution solve_lp(const DsoLp& lp) {
    const int N = lp.n_origins;
    const int K = lp.grid.steps;
    const int m = K * N;
    const double dt = lp.grid.dt;

    for (int i = 0; i < N; ++i) {
        double suffix = 0.0;
        for (int j = i; j < N; ++j) suffix += lp.demand[j];
        require(suffix <= lp.mu[i] * lp.grid.horizon() * (1.0 + 1e-12) + 1e-9,
                ErrorCode::LpInfeasible, "lp: demand exceeds what the horizon can clear");
    }

    auto cost = [&](int k, int i) { return lp.cost(k, i); };
    auto idx = [&](int k, int i) { return k * N + i; };

    Iterate it;
    double mu_scale = *std::max_element(lp.mu.begin(), lp.mu.end());
    it.q = VectorXd::Constant(m, 0.5 * mu_scale);
    it.u = VectorXd::Constant(m, 0.5 * mu_scale);
    it.yc = VectorXd::Zero(m);
    it.yd = VectorXd::Zero(N);
    it.zq = VectorXd::Constant(m, 1.0 + mu_scale);
    it.zu = VectorXd::Constant(m, 1.0 + mu_scale);

    auto residuals = [&](const Iterate& w) {
        Residuals r;
        r.cap.resize(m);
        r.dem = VectorXd::Zero(N);
        r.dq.resize(m);
        r.du.resize(m);
        for (int k = 0; k < K; ++k) {
            double running = 0.0;
            for (int i = N - 1; i >= 0; --i) {
                running += w.q[idx(k, i)];
                r.cap[idx(k, i)] = lp.mu[i] - running - w.u[idx(k, i)];
            }
        }
        for (int i = 0; i < N; ++i) {
            double mass = 0.0;
            for (int k = 0; k < K; ++k) mass += w.q[idx(k, i)];
            r.dem[i] = lp.demand[i] - dt * mass;
        }
        for (int k = 0; k < K; ++k) {
            double prefix = 0.0;
            for (int i = 0; i < N; ++i) {
                prefix += w.yc[idx(k, i)];
                r.dq[idx(k, i)] = cost(k, i) - prefix - dt * w.yd[i] - w.zq[idx(k, i)];
                r.du[idx(k, i)] = -w.yc[idx(k, i)] - w.zu[idx(k, i)];
            }
        }
        return r;
    };

    // A D A^T dy = rhs with D = diag(q/zq, u/zu); per-cell blocks plus an
    // N x N Schur complement over the demand rows.
    auto solve_normal = [&](const VectorXd& dq_over, const VectorXd& du_over,
                            const VectorXd& rhs_cap, const VectorXd& rhs_dem, VectorXd& dyc,
                            VectorXd& dyd) {
        MatrixXd schur = MatrixXd::Zero(N, N);
        VectorXd schur_rhs = rhs_dem;
        for (int i = 0; i < N; ++i) {
            double g = 0.0;
            for (int k = 0; k < K; ++k) g += dq_over[idx(k, i)];
            schur(i, i) = dt * dt * g;
        }
        std::vector<Eigen::LLT<MatrixXd>> llts;
        llts.reserve(K);
        MatrixXd C(N, N), E(N, N);
        for (int k = 0; k < K; ++k) {
            for (int a = 0; a < N; ++a) {
                for (int b = 0; b < N; ++b) {
                    double acc = 0.0;
                    for (int j = std::max(a, b); j < N; ++j) acc += dq_over[idx(k, j)];
                    C(a, b) = acc + (a == b ? du_over[idx(k, a)] : 0.0);
                    E(a, b) = b >= a ? dt * dq_over[idx(k, b)] : 0.0;
                }
            }
            llts.emplace_back(C);
            require(llts.back().info() == Eigen::Success, ErrorCode::Internal,
                    "lp: normal-equation block not positive definite");
            MatrixXd CiE = llts.back().solve(E);
            schur.noalias() -= E.transpose() * CiE;
            schur_rhs.noalias() -= CiE.transpose() * rhs_cap.segment(k * N, N);
        }
        Eigen::LDLT<MatrixXd> sf(schur);
        dyd = sf.solve(schur_rhs);
        dyc.resize(m);
        for (int k = 0; k < K; ++k) {
            for (int a = 0; a < N; ++a) {
                for (int b = 0; b < N; ++b) {
                    double acc = 0.0;
                    for (int j = std::max(a, b); j < N; ++j) acc += dq_over[idx(k, j)];
                    C(a, b) = acc + (a == b ? du_over[idx(k, a)] : 0.0);
                    E(a, b) = b >= a ? dt * dq_over[idx(k, b)] : 0.0;
                }
            }
            dyc.segment(k * N, N) =
                llts[static_cast<std::size_t>(k)].solve(rhs_cap.segment(k * N, N) - E * dyd);
        }
    };

    double cnorm = 1.0, bnorm = 1.0;
    for (int k = 0; k < K; ++k)
        for (int i = 0; i < N; ++i) cnorm = std::max(cnorm, std::fabs(cost(k, i)));
    for (int i = 0; i < N; ++i) bnorm = std::max({bnorm, lp.mu[i], lp.demand[i]});

    LpSolution out;
    const int max_iterations = 120;
    for (int iter = 0; iter < max_iterations; ++iter) {
        Residuals r = residuals(it);
        double gap = (it.q.dot(it.zq) + it.u.dot(it.zu)) / (2.0 * m);
        double rp = std::max(r.cap.lpNorm<Eigen::Infinity>(), r.dem.lpNorm<Eigen::Infinity>());
        double rd = std::max(r.dq.lpNorm<Eigen::Infinity>(), r.du.lpNorm<Eigen::Infinity>());
        out.iterations = iter;
        out.primal_residual = rp / bnorm;
        out.dual_residual = rd / cnorm;
        double obj = 0.0;
        for (int k = 0; k < K; ++k)
            for (int i = 0; i < N; ++i) obj += cost(k, i) * it.q[idx(k, i)];
        out.gap = 2.0 * m * gap / (1.0 + std::fabs(obj));
        if (out.primal_residual <= 1e-10 && out.dual_residual <= 1e-10 && out.gap <= 1e-9) break;
        require(iter + 1 < max_iterations, ErrorCode::NoConvergence,
                "lp: interior point did not converge");

        VectorXd dq_over(m), du_over(m);
        for (int t = 0; t < m; ++t) {
            dq_over[t] = it.q[t] / it.zq[t];
            du_over[t] = it.u[t] / it.zu[t];
        }

        auto assemble_rhs = [&](const VectorXd& cq, const VectorXd& cu, VectorXd& rhs_cap,
                                VectorXd& rhs_dem) {
            // rhs = r_p - A (Z^-1 rc - D r_d)
            VectorXd hq(m), hu(m);
            for (int t = 0; t < m; ++t) {
                hq[t] = cq[t] / it.zq[t] - dq_over[t] * r.dq[t];
                hu[t] = cu[t] / it.zu[t] - du_over[t] * r.du[t];
            }
            rhs_cap.resize(m);
            rhs_dem.resize(N);
            for (int k = 0; k < K; ++k) {
                double running = 0.0;
                for (int i = N - 1; i >= 0; --i) {
                    running += hq[idx(k, i)];
                    rhs_cap[idx(k, i)] = r.cap[idx(k, i)] - running - hu[idx(k, i)];
                }
            }
            for (int i = 0; i < N; ++i) {
                double mass = 0.0;
                for (int k = 0; k < K; ++k) mass += hq[idx(k, i)];
                rhs_dem[i] = r.dem[i] - dt * mass;
            }
        };

        auto take_step = [&](const VectorXd& cq, const VectorXd& cu, VectorXd& dq, VectorXd& du,
                             VectorXd& dyc, VectorXd& dyd, VectorXd& dzq, VectorXd& dzu) {
            VectorXd rhs_cap, rhs_dem;
            assemble_rhs(cq, cu, rhs_cap, rhs_dem);
            solve_normal(dq_over, du_over, rhs_cap, rhs_dem, dyc, dyd);
            dzq.resize(m);
            dzu.resize(m);
            dq.resize(m);
            du.resize(m);
            for (int k = 0; k < K; ++k) {
                double prefix = 0.0;
                for (int i = 0; i < N; ++i) {
                    prefix += dyc[idx(k, i)];
                    int t = idx(k, i);
                    dzq[t] = r.dq[t] - prefix - dt * dyd[i];
                    dzu[t] = r.du[t] - dyc[t];
                    dq[t] = (cq[t] - it.q[t] * dzq[t]) / it.zq[t];
                    du[t] = (cu[t] - it.u[t] * dzu[t]) / it.zu[t];
                }
            }
        };

        auto max_step = [&](const VectorXd& v, const VectorXd& dv) {
            double a = 1.0;
            for (int t = 0; t < v.size(); ++t)
                if (dv[t] < 0.0) a = std::min(a, -v[t] / dv[t]);
            return a;
        };

        // predictor
        VectorXd cq = -it.q.cwiseProduct(it.zq), cu = -it.u.cwiseProduct(it.zu);
        VectorXd dq, du, dyc, dyd, dzq, dzu;
        take_step(cq, cu, dq, du, dyc, dyd, dzq, dzu);
        double ap = std::min(max_step(it.q, dq), std::min(max_step(it.u, du), 1.0));
        double ad = std::min(max_step(it.zq, dzq), std::min(max_step(it.zu, dzu), 1.0));
        double gap_aff = ((it.q + ap * dq).dot(it.zq + ad * dzq) +
                          (it.u + ap * du).dot(it.zu + ad * dzu)) /
                         (2.0 * m);
        double sigma = std::pow(gap_aff / gap, 3.0);
        sigma = std::min(std::max(sigma, 1e-8), 0.99);

        // corrector
        for (int t = 0; t < m; ++t) {
            cq[t] = sigma * gap - it.q[t] * it.zq[t] - dq[t] * dzq[t];
            cu[t] = sigma * gap - it.u[t] * it.zu[t] - du[t] * dzu[t];
        }
        take_step(cq, cu, dq, du, dyc, dyd, dzq, dzu);
        double eta = 0.99995;
        ap = std::min(eta * std::min(max_step(it.q, dq), max_step(it.u, du)), 1.0);
        ad = std::min(eta * std::min(max_step(it.zq, dzq), max_step(it.zu, dzu)), 1.0);
        it.q += ap * dq;
        it.u += ap * du;
        it.yc += ad * dyc;
        it.yd += ad * dyd;
        it.zq += ad * dzq;
        it.zu += ad * dzu;
    }

    out.flow = it.q;
    out.capacity_price.resize(m);
    for (int t = 0; t < m; ++t) out.capacity_price[t] = std::max(0.0, -it.yc[t] / dt);
    out.demand_dual = it.yd;
    double obj = 0.0;
    for (int k = 0; k < K; ++k)
        for (int i = 0; i < N; ++i) obj += cost(k, i) * it.q[idx(k, i)];
    out.objective = obj;
    return out;
}

}  // namespace corridor
