#include "ionchain/normal_modes.hpp"

#include <cmath>

#include "ionchain/constants.hpp"
#include "ionchain/errors.hpp"

namespace ionchain {

std::string direction_name(Direction d) {
    switch (d) {
        case Direction::Axial: return "axial";
        case Direction::RadialX: return "radial_x";
        case Direction::RadialY: return "radial_y";
    }
    return "?";
}

std::string mode_class_name(ModeClass c) {
    switch (c) {
        case ModeClass::ComLike: return "COM";
        case ModeClass::RockingLike: return "rocking";
        case ModeClass::ZigzagLike: return "zigzag";
        case ModeClass::Unclassified: return "unclassified";
    }
    return "?";
}

Eigen::MatrixXd hessian(const SpeciesChain& chain, const TrapConfig& trap,
                        const ChainGeometry& geometry, Direction direction) {
    chain.validate();
    const int n = static_cast<int>(chain.size());
    if (static_cast<int>(geometry.axial_positions.size()) != n)
        throw ValidationError("hessian: geometry does not match chain length");

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    const bool axial = direction == Direction::Axial;
    for (int i = 0; i < n; ++i) {
        const SecularFrequencies f = species_frequencies(trap, chain.ions[i]);
        const double w = axial ? f.axial
                               : (direction == Direction::RadialX ? f.radial_x : f.radial_y);
        double diag = chain.ions[i].mass_kg() * w * w;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const double d = std::abs(geometry.axial_positions[i] - geometry.axial_positions[j]);
            const double c = constants::coulomb_coefficient / (d * d * d);
            if (axial) {
                diag += 2.0 * c;
                h(i, j) = -2.0 * c;
            } else {
                diag -= c;
                h(i, j) = c;
            }
        }
        h(i, i) = diag;
    }
    return h;
}

ModeSpectrum solve_modes(const SpeciesChain& chain, const TrapConfig& trap,
                         const ChainGeometry& geometry, Direction direction) {
    const Eigen::MatrixXd h = hessian(chain, trap, geometry, direction);
    const int n = static_cast<int>(chain.size());

    Eigen::VectorXd inv_sqrt_m(n);
    for (int i = 0; i < n; ++i) inv_sqrt_m[i] = 1.0 / std::sqrt(chain.ions[i].mass_kg());
    const Eigen::MatrixXd d = inv_sqrt_m.asDiagonal() * h * inv_sqrt_m.asDiagonal();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d);
    if (es.info() != Eigen::Success)
        throw ConvergenceError("solve_modes: eigensolver failed");

    ModeSpectrum spec;
    spec.direction = direction;
    spec.chain = chain;
    spec.geometry = geometry;
    spec.frequencies.resize(n);
    spec.eigenvectors = es.eigenvectors();

    for (int m = 0; m < n; ++m) {
        const double lambda = es.eigenvalues()[m];
        if (lambda <= 0.0) {
            if (direction != Direction::Axial)
                throw PhysicsError("solve_modes: zigzag instability, " + direction_name(direction) +
                                   " mode with non-positive squared frequency");
            throw PhysicsError("solve_modes: non-positive axial squared frequency");
        }
        spec.frequencies[m] = std::sqrt(lambda);
    }

    // deterministic orientation: largest-magnitude entry positive
    for (int m = 0; m < n; ++m) {
        int imax = 0;
        for (int i = 1; i < n; ++i)
            if (std::abs(spec.eigenvectors(i, m)) > std::abs(spec.eigenvectors(imax, m))) imax = i;
        if (spec.eigenvectors(imax, m) < 0.0) spec.eigenvectors.col(m) *= -1.0;
    }
    return spec;
}

ModeLabel classify(const ModeSpectrum& spectrum, int mode_index) {
    const int n = static_cast<int>(spectrum.size());
    if (mode_index < 0 || mode_index >= n)
        throw ValidationError("classify: mode index out of range");

    const Eigen::VectorXd v = spectrum.eigenvectors.col(mode_index);
    const double floor = 1e-6 * v.cwiseAbs().maxCoeff();

    ModeLabel out;
    double prev = 0.0;
    for (int i = 0; i < n; ++i) {
        if (std::abs(v[i]) < floor) continue; // rocking modes have exact zeros
        if (prev != 0.0 && v[i] * prev < 0.0) ++out.sign_changes;
        prev = v[i];
    }
    switch (out.sign_changes) {
        case 0: out.label = ModeClass::ComLike; break;
        case 1: out.label = ModeClass::RockingLike; break;
        case 2: out.label = ModeClass::ZigzagLike; break;
        default: out.label = ModeClass::Unclassified; break;
    }
    return out;
}

std::vector<double> participation(const ModeSpectrum& spectrum, int ion_index) {
    const int n = static_cast<int>(spectrum.size());
    if (ion_index < 0 || ion_index >= n)
        throw ValidationError("participation: ion index out of range");
    std::vector<double> p(n);
    for (int m = 0; m < n; ++m) {
        const double b = spectrum.eigenvectors(ion_index, m);
        p[m] = b * b;
    }
    return p;
}

LambDicke lamb_dicke(const ModeSpectrum& spectrum, int ion_index, int mode_index,
                     double wavevector_magnitude, double projection) {
    const int n = static_cast<int>(spectrum.size());
    if (ion_index < 0 || ion_index >= n || mode_index < 0 || mode_index >= n)
        throw ValidationError("lamb_dicke: index out of range");
    const double w = spectrum.frequencies[mode_index];
    if (w <= 0.0)
        throw PhysicsError("lamb_dicke: mode frequency must be positive");

    const double m = spectrum.chain.ions[ion_index].mass_kg();
    LambDicke ld;
    ld.ion_index = ion_index;
    ld.mode_index = mode_index;
    ld.eta = std::abs(projection) * wavevector_magnitude *
             std::abs(spectrum.eigenvectors(ion_index, mode_index)) *
             std::sqrt(constants::hbar / (2.0 * m * w));
    return ld;
}

} // namespace ionchain
