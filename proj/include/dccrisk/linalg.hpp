#pragma once

#include <Eigen/Dense>
#include <optional>

namespace dccrisk {

// Lower Cholesky factor of a symmetric matrix, or nullopt when the matrix is
// not positive definite. A pivot counts as positive when it exceeds
// 1e-12 times the largest diagonal entry, which guards the correlation
// recursions against numerically semidefinite targeting matrices.
std::optional<Eigen::MatrixXd> cholesky(const Eigen::MatrixXd& m);

inline bool is_positive_definite(const Eigen::MatrixXd& m) {
    return cholesky(m).has_value();
}

// w' M w.
double quad_form(const Eigen::MatrixXd& m, const Eigen::VectorXd& w);

// Rescales a symmetric matrix with positive diagonal to a correlation
// matrix; the output diagonal is set to exactly 1.
Eigen::MatrixXd to_correlation(const Eigen::MatrixXd& m);

// Least squares through the normal equations, solved with the Cholesky
// factor of X'X.
Eigen::VectorXd ols_solve(const Eigen::MatrixXd& x, const Eigen::VectorXd& y);

}  // namespace dccrisk
