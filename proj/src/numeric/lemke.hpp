#pragma once

#include <Eigen/Dense>

namespace corridor {

struct LemkeResult {
    bool solved = false;
    Eigen::VectorXd z;
    int pivots = 0;
};

// Complementary pivoting for z >= 0, Mz + b >= 0, z.(Mz + b) = 0 with the
// unit covering vector. Ties prefer dropping the artificial; on cycling the
// right-hand side is perturbed deterministically and the solve repeats, with
// a support polish restoring the unperturbed data.
LemkeResult lemke(const Eigen::MatrixXd& m, const Eigen::VectorXd& b, int max_pivots = 0);

}  // namespace corridor
