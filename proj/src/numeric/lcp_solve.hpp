#pragma once

#include <vector>

#include "core/pwl.hpp"
#include "numeric/lcp.hpp"

namespace corridor {

struct LcpOptions {
    double feasibility_tol = 1e-9;     // allowed negativity of F at exit, relative to |b|
    double complementarity_tol = 1e-8; // |X.F| relative to 1 + |b| |X|
    int max_outer = 160;               // cost-adjustment sweeps
    int max_repair = 20000;            // support flips
    double rho_seed = -1.0;            // <0: derive from the aggregate closed form
};

struct LcpSolution {
    Eigen::VectorXd x;                 // [q (mass per cell), w, rho], time-major
    double complementarity = 0.0;      // max_i |x_i f_i|
    double complementarity_total = 0.0;  // |x . f|
    double min_f = 0.0;
    double min_x = 0.0;
    int outer_iterations = 0;
    int repair_iterations = 0;

    int n = 0, steps = 0;
    double dt = 0.0;

    double mass(int k, int i) const { return x[k * n + i]; }
    double rate(int k, int i) const { return x[k * n + i] / dt; }
    double delay(int k, int i) const { return x[n * steps + k * n + i]; }
    double rho(int i) const { return x[2 * n * steps + i]; }
    // Grid-sampled delay profile of bottleneck i (linear between samples).
    PwlFunction delay_profile(int i) const;
    // Per-cell rate profile of origin i.
    PwlFunction rate_profile(int i) const;
};

// Solves the complementarity system exactly, in three stages: a cost
// tatonnement over per-cell complementary subproblems localizes the windows,
// the discovered support is then solved as one linear system affine in rho
// (the demand rows close it), and violated sign conditions are repaired by
// single-index support flips until every inequality certifies. Throws
// ErrorCode::NoConvergence with the residual triple when certification fails.
LcpSolution solve_lcp(const LcpProblem& problem, const LcpOptions& options = {});

}  // namespace corridor
