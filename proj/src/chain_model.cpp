#include "ionchain/chain_model.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ionchain/constants.hpp"
#include "ionchain/errors.hpp"

namespace ionchain {

namespace {

constexpr double kGradientTolerance = 1e-12; // of the natural force C/ell^2
constexpr int kMaxNewtonIterations = 200;
constexpr int kMaxDescentIterations = 20000;

// Dimensionless axial potential in units of C/ell, coordinates in ell.
// The per-ion harmonic coefficient m_i w_z,i^2 is species independent
// (charge-determined axial confinement), so this problem has no masses.
double axial_potential(const Eigen::VectorXd& u) {
    const int n = static_cast<int>(u.size());
    double v = 0.5 * u.squaredNorm();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            v += 1.0 / std::abs(u[i] - u[j]);
    return v;
}

Eigen::VectorXd axial_gradient(const Eigen::VectorXd& u) {
    const int n = static_cast<int>(u.size());
    Eigen::VectorXd g = u;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const double d = u[i] - u[j];
            g[i] -= (d > 0 ? 1.0 : -1.0) / (d * d);
        }
    }
    return g;
}

Eigen::MatrixXd axial_hessian_dimless(const Eigen::VectorXd& u) {
    const int n = static_cast<int>(u.size());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        double diag = 1.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const double c = 2.0 / std::pow(std::abs(u[i] - u[j]), 3);
            diag += c;
            h(i, j) = -c;
        }
        h(i, i) = diag;
    }
    return h;
}

bool strictly_increasing(const Eigen::VectorXd& u) {
    for (int i = 1; i < u.size(); ++i)
        if (u[i] <= u[i - 1]) return false;
    return true;
}

} // namespace

double length_scale(const TrapConfig& trap) {
    trap.validate();
    const double m = trap.reference_species.mass_kg();
    const double w2 = trap.axial_frequency * trap.axial_frequency;
    return std::cbrt(constants::coulomb_coefficient / (m * w2));
}

SecularFrequencies species_frequencies(const TrapConfig& trap, const Species& species) {
    trap.validate();
    if (species.mass_amu <= 0.0)
        throw ValidationError("species '" + species.name + "' has non-positive mass");

    const double mass_ratio = trap.reference_species.mass_amu / species.mass_amu;
    SecularFrequencies f;
    f.axial = trap.axial_frequency * std::sqrt(mass_ratio);

    if (trap.radial_model == RadialModel::DirectPerSpecies) {
        f.radial_x = trap.radial_frequency_x;
        f.radial_y = trap.radial_frequency_y;
        return f;
    }

    // Pseudopotential scaling: recover the reference pure-RF radial
    // frequency w_p from the configured total, scale the RF part by 1/m and
    // the static defocus by 1/sqrt(m) (both entering squared).
    const double wz2 = trap.axial_frequency * trap.axial_frequency;
    for (auto [total_ref, out] : {std::pair{trap.radial_frequency_x, &f.radial_x},
                                  std::pair{trap.radial_frequency_y, &f.radial_y}}) {
        const double wp2_ref = total_ref * total_ref + 0.5 * wz2;
        const double w2 = mass_ratio * mass_ratio * wp2_ref - 0.5 * mass_ratio * wz2;
        if (w2 <= 0.0)
            throw PhysicsError("species '" + species.name +
                               "' is radially unstable under pseudopotential scaling");
        *out = std::sqrt(w2);
    }
    return f;
}

double potential_energy(const SpeciesChain& chain, const TrapConfig& trap,
                        const Eigen::Matrix3Xd& positions) {
    chain.validate();
    const int n = static_cast<int>(chain.size());
    if (positions.cols() != n)
        throw ValidationError("positions: expected one column per ion");

    double u = 0.0;
    for (int i = 0; i < n; ++i) {
        const SecularFrequencies f = species_frequencies(trap, chain.ions[i]);
        const double m = chain.ions[i].mass_kg();
        u += 0.5 * m *
             (f.radial_x * f.radial_x * positions(0, i) * positions(0, i) +
              f.radial_y * f.radial_y * positions(1, i) * positions(1, i) +
              f.axial * f.axial * positions(2, i) * positions(2, i));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double r = (positions.col(i) - positions.col(j)).norm();
            if (r <= 0.0)
                throw PhysicsError("coincident ions at indices " + std::to_string(i) +
                                   " and " + std::to_string(j));
            u += constants::coulomb_coefficient / r;
        }
    }
    return u;
}

Eigen::Matrix3Xd potential_forces(const SpeciesChain& chain, const TrapConfig& trap,
                                  const Eigen::Matrix3Xd& positions) {
    const int n = static_cast<int>(chain.size());
    Eigen::Matrix3Xd f(3, n);
    for (int i = 0; i < n; ++i) {
        const SecularFrequencies w = species_frequencies(trap, chain.ions[i]);
        const double m = chain.ions[i].mass_kg();
        f(0, i) = -m * w.radial_x * w.radial_x * positions(0, i);
        f(1, i) = -m * w.radial_y * w.radial_y * positions(1, i);
        f(2, i) = -m * w.axial * w.axial * positions(2, i);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Eigen::Vector3d d = positions.col(i) - positions.col(j);
            const double r2 = d.squaredNorm();
            const double r = std::sqrt(r2);
            if (r <= 0.0)
                throw PhysicsError("coincident ions at indices " + std::to_string(i) +
                                   " and " + std::to_string(j));
            const Eigen::Vector3d pair = constants::coulomb_coefficient * d / (r2 * r);
            f.col(i) += pair;
            f.col(j) -= pair;
        }
    }
    return f;
}

ChainGeometry equilibrium_positions(const SpeciesChain& chain, const TrapConfig& trap) {
    chain.validate();
    trap.validate();
    const int n = static_cast<int>(chain.size());
    const double ell = length_scale(trap);

    ChainGeometry geom;
    geom.length_scale = ell;

    Eigen::VectorXd u(n);
    if (n == 1) {
        u[0] = 0.0;
    } else {
        // evenly spaced guess spanning +-(N-1)*0.7*ell/2 (dimensionless)
        const double half_span = (n - 1) * 0.35;
        for (int i = 0; i < n; ++i)
            u[i] = -half_span + 2.0 * half_span * i / (n - 1);

        Eigen::VectorXd g = axial_gradient(u);
        bool converged = g.norm() < kGradientTolerance;

        for (int iter = 0; iter < kMaxNewtonIterations && !converged; ++iter) {
            const Eigen::MatrixXd h = axial_hessian_dimless(u);
            Eigen::VectorXd step = h.ldlt().solve(-g);
            if (!step.allFinite()) break;

            // backtrack until the gradient norm drops and the order is kept
            double lambda = 1.0;
            bool accepted = false;
            const double g0 = g.norm();
            for (int bt = 0; bt < 60; ++bt, lambda *= 0.5) {
                Eigen::VectorXd trial = u + lambda * step;
                if (!strictly_increasing(trial)) continue;
                const Eigen::VectorXd gt = axial_gradient(trial);
                if (gt.norm() < g0) {
                    u = trial;
                    g = gt;
                    accepted = true;
                    break;
                }
            }
            if (!accepted) break;
            converged = g.norm() < kGradientTolerance;
        }

        if (!converged) {
            // gradient descent fallback, then one more Newton pass
            g = axial_gradient(u);
            for (int iter = 0; iter < kMaxDescentIterations && g.norm() >= 1e-8; ++iter) {
                const double v0 = axial_potential(u);
                double step = 0.1;
                bool moved = false;
                for (int bt = 0; bt < 60; ++bt, step *= 0.5) {
                    Eigen::VectorXd trial = u - step * g;
                    if (!strictly_increasing(trial)) continue;
                    if (axial_potential(trial) < v0) {
                        u = trial;
                        moved = true;
                        break;
                    }
                }
                if (!moved) break;
                g = axial_gradient(u);
            }
            for (int iter = 0; iter < kMaxNewtonIterations && !converged; ++iter) {
                const Eigen::MatrixXd h = axial_hessian_dimless(u);
                const Eigen::VectorXd step = h.ldlt().solve(-g);
                if (!step.allFinite() || !strictly_increasing(u + step)) break;
                u += step;
                g = axial_gradient(u);
                converged = g.norm() < kGradientTolerance;
            }
            if (!converged)
                throw ConvergenceError("equilibrium_positions: no convergence after " +
                                       std::to_string(kMaxNewtonIterations) + " Newton and " +
                                       std::to_string(kMaxDescentIterations) + " descent iterations");
        }
    }

    geom.axial_positions.resize(n);
    for (int i = 0; i < n; ++i) geom.axial_positions[i] = u[i] * ell;

    const double force_scale = constants::coulomb_coefficient / (ell * ell);
    geom.residual_gradient_norm = axial_gradient(u).norm() * force_scale;

    // Transverse stability at the solution: mass-weighted transverse Hessian
    // must be positive definite in both directions.
    double min_curv = std::numeric_limits<double>::infinity();
    for (int dir = 0; dir < 2; ++dir) {
        Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i) {
            const SecularFrequencies f = species_frequencies(trap, chain.ions[i]);
            const double w = dir == 0 ? f.radial_x : f.radial_y;
            const double mi = chain.ions[i].mass_kg();
            double diag = mi * w * w;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const double d = std::abs(geom.axial_positions[i] - geom.axial_positions[j]);
                const double c = constants::coulomb_coefficient / (d * d * d);
                diag -= c;
                b(i, j) = c / std::sqrt(mi * chain.ions[j].mass_kg());
            }
            b(i, i) = diag / mi;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b, Eigen::EigenvaluesOnly);
        min_curv = std::min(min_curv, es.eigenvalues().minCoeff());
    }
    geom.min_transverse_curvature = min_curv;
    geom.transverse_stable = min_curv > 0.0;

    return geom;
}

} // namespace ionchain
