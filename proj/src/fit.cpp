#include "ionchain/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace ionchain::fit {

SimplexResult nelder_mead(const ScalarFn& f, const Eigen::VectorXd& x0,
                          const Eigen::VectorXd& step, const SimplexOptions& opts) {
    const int n = static_cast<int>(x0.size());
    std::vector<Eigen::VectorXd> pts(n + 1, x0);
    std::vector<double> vals(n + 1);
    for (int i = 0; i < n; ++i) pts[i + 1][i] += step[i] != 0.0 ? step[i] : 1e-4;
    for (int i = 0; i <= n; ++i) vals[i] = f(pts[i]);

    std::vector<int> order(n + 1);
    SimplexResult res;

    for (res.iterations = 0; res.iterations < opts.max_iterations; ++res.iterations) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
        const int best = order[0], worst = order[n], second = order[n - 1];

        // convergence: simplex collapsed in parameters or values
        double extent = 0.0;
        for (int i = 0; i <= n; ++i)
            extent = std::max(extent, (pts[i] - pts[best]).cwiseAbs().maxCoeff() /
                                          std::max(1.0, pts[best].cwiseAbs().maxCoeff()));
        if (extent < opts.parameter_tolerance ||
            std::abs(vals[worst] - vals[best]) <
                opts.value_tolerance * (std::abs(vals[best]) + 1e-300)) {
            res.converged = true;
            break;
        }

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
        for (int i = 0; i <= n; ++i)
            if (i != worst) centroid += pts[i];
        centroid /= n;

        const Eigen::VectorXd refl = centroid + (centroid - pts[worst]);
        const double frefl = f(refl);
        if (frefl < vals[best]) {
            const Eigen::VectorXd expd = centroid + 2.0 * (centroid - pts[worst]);
            const double fexpd = f(expd);
            if (fexpd < frefl) { pts[worst] = expd; vals[worst] = fexpd; }
            else { pts[worst] = refl; vals[worst] = frefl; }
        } else if (frefl < vals[second]) {
            pts[worst] = refl;
            vals[worst] = frefl;
        } else {
            const Eigen::VectorXd contr =
                centroid + 0.5 * ((frefl < vals[worst] ? refl : pts[worst]) - centroid);
            const double fcontr = f(contr);
            if (fcontr < std::min(frefl, vals[worst])) {
                pts[worst] = contr;
                vals[worst] = fcontr;
            } else {
                for (int i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    pts[i] = pts[best] + 0.5 * (pts[i] - pts[best]);
                    vals[i] = f(pts[i]);
                }
            }
        }
    }

    const int best = static_cast<int>(std::min_element(vals.begin(), vals.end()) - vals.begin());
    res.x = pts[best];
    res.value = vals[best];
    return res;
}

namespace {

Eigen::MatrixXd numeric_jacobian(const ResidualFn& f, const Eigen::VectorXd& x,
                                 const Eigen::VectorXd& r0) {
    const int n = static_cast<int>(x.size());
    const int m = static_cast<int>(r0.size());
    Eigen::MatrixXd j(m, n);
    for (int k = 0; k < n; ++k) {
        const double h = 1e-7 * std::max(std::abs(x[k]), 1e-12);
        Eigen::VectorXd xp = x;
        xp[k] += h;
        j.col(k) = (f(xp) - r0) / h;
    }
    return j;
}

} // namespace

LeastSquaresResult levenberg_marquardt(const ResidualFn& f, const Eigen::VectorXd& x0,
                                       const LeastSquaresOptions& opts) {
    LeastSquaresResult res;
    res.x = x0;
    Eigen::VectorXd r = f(res.x);
    res.chi2 = r.squaredNorm();

    double lambda = 1e-3;
    const int n = static_cast<int>(x0.size());

    for (res.iterations = 0; res.iterations < opts.max_iterations; ++res.iterations) {
        const Eigen::MatrixXd j = numeric_jacobian(f, res.x, r);
        const Eigen::MatrixXd jtj = j.transpose() * j;
        const Eigen::VectorXd jtr = j.transpose() * r;

        bool stepped = false;
        for (int damp = 0; damp < 30; ++damp) {
            Eigen::MatrixXd a = jtj;
            a.diagonal() += lambda * jtj.diagonal().cwiseMax(1e-300);
            const Eigen::VectorXd delta = a.ldlt().solve(-jtr);
            if (!delta.allFinite()) { lambda *= 10.0; continue; }

            const Eigen::VectorXd xt = res.x + delta;
            const Eigen::VectorXd rt = f(xt);
            const double ct = rt.squaredNorm();
            if (ct <= res.chi2) {
                double rel = 0.0;
                for (int k = 0; k < n; ++k)
                    rel = std::max(rel, std::abs(delta[k]) / std::max(std::abs(res.x[k]), 1e-300));
                res.x = xt;
                r = rt;
                res.chi2 = ct;
                lambda = std::max(lambda * 0.3, 1e-12);
                stepped = true;
                if (rel < opts.relative_parameter_tolerance) res.converged = true;
                break;
            }
            lambda *= 10.0;
        }
        if (res.converged || !stepped) {
            // a rejected step from a tiny lambda-damped region also means
            // we are at a (numerical) minimum
            if (!stepped) res.converged = true;
            break;
        }
    }

    const Eigen::MatrixXd j = numeric_jacobian(f, res.x, r);
    Eigen::MatrixXd jtj = j.transpose() * j;
    res.covariance = jtj.completeOrthogonalDecomposition().pseudoInverse();
    return res;
}

} // namespace ionchain::fit
