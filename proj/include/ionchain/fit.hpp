#pragma once

#include <Eigen/Dense>
#include <functional>

namespace ionchain::fit {

// Weighted residual vector r(x); the objective is |r(x)|^2.
using ResidualFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
using ScalarFn = std::function<double(const Eigen::VectorXd&)>;

struct SimplexOptions {
    int max_iterations = 4000;
    double parameter_tolerance = 1e-9; // relative simplex extent
    double value_tolerance = 1e-13;
};

struct SimplexResult {
    Eigen::VectorXd x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Nelder-Mead downhill simplex; `step` sets the initial simplex extent
// per parameter.
SimplexResult nelder_mead(const ScalarFn& f, const Eigen::VectorXd& x0,
                          const Eigen::VectorXd& step, const SimplexOptions& opts = {});

struct LeastSquaresOptions {
    int max_iterations = 400;
    double relative_parameter_tolerance = 1e-8;
};

struct LeastSquaresResult {
    Eigen::VectorXd x;
    double chi2 = 0.0;
    Eigen::MatrixXd covariance; // (J^T J)^-1 of weighted residuals
    int iterations = 0;
    bool converged = false;
};

// Levenberg-Marquardt on a forward-difference Jacobian. Converges when the
// relative parameter change drops below the tolerance.
LeastSquaresResult levenberg_marquardt(const ResidualFn& f, const Eigen::VectorXd& x0,
                                       const LeastSquaresOptions& opts = {});

} // namespace ionchain::fit
