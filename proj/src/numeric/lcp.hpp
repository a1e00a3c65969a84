#pragma once

#include <Eigen/Dense>
#include <string>

#include "core/network.hpp"
#include "core/schedule.hpp"
#include "numeric/grid.hpp"

namespace corridor {

// Finite complementarity problem for the user equilibrium:
//
//   find X = [q, w, rho] >= 0  with  F(X) = M X + b >= 0,  X . F(X) = 0,
//
// where q stacks per-cell masses time-major, w the queue delays and rho the
// equilibrium costs. M carries the three block rows
//
//   [ 0            I_K (x) L            -1_K (x) I_N ]
//   [ -I_K (x) L^T  Delta_K (x) D_mu     0           ]
//   [ 1_K^T (x) I_N 0                    0           ]
//
// with L the lower-triangular ladder of ones, Delta_K the backward difference
// and D_mu = diag(mu)(I_N - L) for the morning commute (the mirrored
// diag(mu) L with flipped sign for the evening one). q carries vehicles per
// cell, so b = [s + c; dt * (1_K (x) mu); -Q].
class LcpProblem {
public:
    LcpProblem(const CorridorNetwork& net, const ScheduleDelay& s, const TimeGrid& grid);

    int n_origins() const { return n_; }
    const TimeGrid& grid() const { return grid_; }
    Direction direction() const { return direction_; }
    int dimension() const { return 2 * n_ * grid_.steps + n_; }
    const Eigen::VectorXd& rhs() const { return b_; }
    const std::vector<double>& mu() const { return mu_; }
    const std::vector<double>& demand() const { return demand_; }
    double schedule_cost(int k, int i) const { return b_[k * n_ + i]; }

    int index_q(int k, int i) const { return k * n_ + i; }
    int index_w(int k, int i) const { return n_ * grid_.steps + k * n_ + i; }
    int index_rho(int i) const { return 2 * n_ * grid_.steps + i; }

    Eigen::VectorXd multiply(const Eigen::VectorXd& x) const;  // M x via the block structure
    Eigen::VectorXd f(const Eigen::VectorXd& x) const { return multiply(x) + b_; }
    Eigen::MatrixXd dense() const;  // materialized M, for dumps and small cross-checks

    std::string block_descriptor() const;

private:
    int n_ = 0;
    TimeGrid grid_;
    Direction direction_ = Direction::Morning;
    std::vector<double> mu_;
    std::vector<double> demand_;
    Eigen::VectorXd b_;
};

LcpProblem build_lcp(const CorridorNetwork& net, const ScheduleDelay& s, const TimeGrid& grid,
                     Direction direction);

}  // namespace corridor
