#include "numeric/lcp.hpp"

#include <sstream>

namespace corridor {

LcpProblem::LcpProblem(const CorridorNetwork& net, const ScheduleDelay& s, const TimeGrid& grid)
    : n_(net.size()), grid_(grid), direction_(net.direction), mu_(net.capacity),
      demand_(net.demand) {
    net.validate();
    require(std::abs(grid.horizon() - net.horizon) <= 1e-9 * (1.0 + net.horizon),
            ErrorCode::InvalidArgument, "lcp: grid horizon does not match the network");
    const int K = grid_.steps;
    b_.resize(dimension());
    for (int k = 0; k < K; ++k)
        for (int i = 0; i < n_; ++i) {
            b_[index_q(k, i)] = s.eval(grid_.time(k)) + net.free_flow_time[i];
            b_[index_w(k, i)] = mu_[i] * grid_.dt;
        }
    for (int i = 0; i < n_; ++i) b_[index_rho(i)] = -demand_[i];
}

LcpProblem build_lcp(const CorridorNetwork& net, const ScheduleDelay& s, const TimeGrid& grid,
                     Direction direction) {
    CorridorNetwork oriented = net;
    oriented.direction = direction;
    return LcpProblem(oriented, s, grid);
}

Eigen::VectorXd LcpProblem::multiply(const Eigen::VectorXd& x) const {
    require(x.size() == dimension(), ErrorCode::InvalidArgument, "lcp: dimension mismatch");
    const int K = grid_.steps;
    Eigen::VectorXd y = Eigen::VectorXd::Zero(dimension());
    for (int k = 0; k < K; ++k) {
        // rows q(k,i): sum_{j<=i} w_j[k] - rho_i
        double prefix = 0.0;
        for (int i = 0; i < n_; ++i) {
            prefix += x[index_w(k, i)];
            y[index_q(k, i)] = prefix - x[index_rho(i)];
        }
        // rows w(k,i): -sum_{j>=i} q_j[k] + queue coupling
        double suffix = 0.0;
        for (int i = n_ - 1; i >= 0; --i) {
            suffix += x[index_q(k, i)];
            double coupling = 0.0;
            for (int j = 0; j <= i; ++j) {
                if (direction_ == Direction::Morning && j == i) continue;  // strictly lower ladder
                double dw = x[index_w(k, j)] - (k > 0 ? x[index_w(k - 1, j)] : 0.0);
                coupling += dw;
            }
            double sign = direction_ == Direction::Morning ? -1.0 : 1.0;
            y[index_w(k, i)] = -suffix + sign * mu_[i] * coupling;
        }
    }
    for (int i = 0; i < n_; ++i) {
        double mass = 0.0;
        for (int k = 0; k < K; ++k) mass += x[index_q(k, i)];
        y[index_rho(i)] = mass;
    }
    return y;
}

Eigen::MatrixXd LcpProblem::dense() const {
    const int dim = dimension();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
    for (int c = 0; c < dim; ++c) {
        e[c] = 1.0;
        m.col(c) = multiply(e);
        e[c] = 0.0;
    }
    return m;
}

std::string LcpProblem::block_descriptor() const {
    std::ostringstream os;
    const int K = grid_.steps;
    os << "X = [q, w, rho], time-major, N=" << n_ << ", K=" << K << ", dt=" << grid_.dt
       << ", dim=" << dimension() << "\n";
    os << "rows q: (I_K x L) w - (1_K x I_N) rho + s + c\n";
    if (direction_ == Direction::Morning)
        os << "rows w: -(I_K x L^T) q + (Delta_K x diag(mu)(I_N - L)) w + dt mu\n";
    else
        os << "rows w: -(I_K x L^T) q + (Delta_K x diag(mu) L) w + dt mu\n";
    os << "rows rho: (1_K^T x I_N) q - Q";
    return os.str();
}

}  // namespace corridor
