#include "dccrisk/linalg.hpp"

#include <cmath>

#include "dccrisk/errors.hpp"

namespace dccrisk {

std::optional<Eigen::MatrixXd> cholesky(const Eigen::MatrixXd& m) {
    const Eigen::Index n = m.rows();
    if (n != m.cols() || n < 1) throw DimError("cholesky: matrix must be square");
    const double pivot_floor = 1e-12 * std::max(m.diagonal().maxCoeff(), 0.0);
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        double d = m(j, j);
        for (Eigen::Index k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (!(d > pivot_floor)) return std::nullopt;
        l(j, j) = std::sqrt(d);
        for (Eigen::Index i = j + 1; i < n; ++i) {
            double s = m(i, j);
            for (Eigen::Index k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            l(i, j) = s / l(j, j);
        }
    }
    return l;
}

double quad_form(const Eigen::MatrixXd& m, const Eigen::VectorXd& w) {
    if (m.rows() != m.cols() || m.rows() != w.size())
        throw DimError("quad_form: dimension mismatch");
    return w.dot(m * w);
}

Eigen::MatrixXd to_correlation(const Eigen::MatrixXd& m) {
    const Eigen::Index n = m.rows();
    if (n != m.cols()) throw DimError("to_correlation: matrix must be square");
    Eigen::VectorXd inv_sd(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!(m(i, i) > 0.0))
            throw DomainError("to_correlation: diagonal must be strictly positive");
        inv_sd[i] = 1.0 / std::sqrt(m(i, i));
    }
    Eigen::MatrixXd p(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        p(i, i) = 1.0;
        for (Eigen::Index j = 0; j < i; ++j) {
            const double v = m(i, j) * inv_sd[i] * inv_sd[j];
            p(i, j) = v;
            p(j, i) = v;
        }
    }
    return p;
}

Eigen::VectorXd ols_solve(const Eigen::MatrixXd& x, const Eigen::VectorXd& y) {
    if (x.rows() != y.size()) throw DimError("ols_solve: row count mismatch");
    const Eigen::MatrixXd gram = x.transpose() * x;
    const auto factor = cholesky(gram);
    if (!factor) throw RankError("ols_solve: regressors are rank deficient");
    const Eigen::VectorXd rhs = x.transpose() * y;
    // Forward then backward substitution with the lower factor.
    const Eigen::VectorXd z =
        factor->triangularView<Eigen::Lower>().solve(rhs);
    return factor->transpose().triangularView<Eigen::Upper>().solve(z);
}

}  // namespace dccrisk
