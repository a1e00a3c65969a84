#pragma once

#include <Eigen/Dense>
#include <vector>

#include "core/network.hpp"
#include "core/schedule.hpp"
#include "numeric/grid.hpp"

namespace corridor {

// Finite system-optimum program on a time grid. Variables are the arrival
// (morning) or departure (evening) rates q[k][i] >= 0; each cell carries the
// nested capacity rows sum_{j>=i} q[k][j] <= mu_i and each origin the mass
// row sum_k q[k][i] dt = Q_i. The objective charges (s(t_k) + c_i) dt per
// unit rate.
struct DsoLp {
    TimeGrid grid;
    int n_origins = 0;
    std::vector<double> mu;
    std::vector<double> demand;
    std::vector<double> free_flow;
    std::vector<double> schedule_sample;  // s(t_k)

    int n_vars() const { return grid.steps * n_origins; }
    int n_capacity_rows() const { return grid.steps * n_origins; }
    int n_demand_rows() const { return n_origins; }
    double cost(int k, int i) const { return (schedule_sample[k] + free_flow[i]) * grid.dt; }
};

DsoLp build_dso_lp(const CorridorNetwork& net, const ScheduleDelay& s, const TimeGrid& grid);

struct LpSolution {
    Eigen::VectorXd flow;            // rates, index k * N + i
    Eigen::VectorXd capacity_price;  // dual of the capacity rows, price units, index k * N + i
    Eigen::VectorXd demand_dual;     // rho_i
    double objective = 0.0;
    int iterations = 0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    double gap = 0.0;

    double rate(int k, int i, int n) const { return flow[k * n + i]; }
    double price(int k, int i, int n) const { return capacity_price[k * n + i]; }
};

// Primal-dual interior-point solve. The normal equations factor per time
// cell, leaving an N x N Schur system for the demand rows, so the cost per
// iteration is O(K N^3). Duality gap at exit is below 1e-7 * |objective|.
// Throws LpInfeasible when some prefix demand cannot clear the horizon.
LpSolution solve_lp(const DsoLp& lp);

}  // namespace corridor
