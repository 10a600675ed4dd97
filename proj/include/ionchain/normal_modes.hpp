#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "ionchain/chain_model.hpp"
#include "ionchain/species.hpp"

namespace ionchain {

enum class Direction { Axial, RadialX, RadialY };

std::string direction_name(Direction d);

// Normal modes of one direction. Column m of `eigenvectors` is the
// mass-weighted eigenvector b_m; frequencies ascend with the column index.
struct ModeSpectrum {
    Direction direction = Direction::Axial;
    std::vector<double> frequencies;  // angular, rad/s, ascending
    Eigen::MatrixXd eigenvectors;     // N x N, orthonormal columns
    SpeciesChain chain;
    ChainGeometry geometry;

    std::size_t size() const { return frequencies.size(); }
};

enum class ModeClass { ComLike, RockingLike, ZigzagLike, Unclassified };

std::string mode_class_name(ModeClass c);

struct ModeLabel {
    ModeClass label = ModeClass::Unclassified;
    int sign_changes = 0;
};

struct LambDicke {
    int ion_index = 0;
    int mode_index = 0;
    double eta = 0.0;
};

// Second-derivative matrix of the potential at equilibrium, J/m^2.
// Axial: A_ii = m_i w_z,i^2 + sum 2C/d^3, A_ij = -2C/d^3.
// Transverse: B_ii = m_i w_d,i^2 - sum C/d^3, B_ij = +C/d^3.
Eigen::MatrixXd hessian(const SpeciesChain& chain, const TrapConfig& trap,
                        const ChainGeometry& geometry, Direction direction);

// Eigensolve of D_ij = H_ij/sqrt(m_i m_j). Throws PhysicsError when a
// transverse direction has a non-positive eigenvalue (zigzag instability).
ModeSpectrum solve_modes(const SpeciesChain& chain, const TrapConfig& trap,
                         const ChainGeometry& geometry, Direction direction);

// Label by the number of strict sign changes along the eigenvector;
// entries below 1e-6 of the largest magnitude are skipped.
ModeLabel classify(const ModeSpectrum& spectrum, int mode_index);

// Squared eigenvector components of one ion across all modes of the
// spectrum; they sum to one.
std::vector<double> participation(const ModeSpectrum& spectrum, int ion_index);

// eta = |projection| k |b_{ion,mode}| sqrt(hbar/(2 m_ion w_mode)).
LambDicke lamb_dicke(const ModeSpectrum& spectrum, int ion_index, int mode_index,
                     double wavevector_magnitude, double projection);

} // namespace ionchain
