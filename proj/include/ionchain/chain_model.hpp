#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ionchain/species.hpp"

namespace ionchain {

// Secular angular frequencies of one species in the trap.
struct SecularFrequencies {
    double axial = 0.0;
    double radial_x = 0.0;
    double radial_y = 0.0;
};

// Equilibrium of a linear chain. Positions are axial coordinates in metres,
// strictly increasing, one per ion in chain order.
struct ChainGeometry {
    std::vector<double> axial_positions;
    double length_scale = 0.0;          // ell, see length_scale()
    double residual_gradient_norm = 0.0; // |grad U| at the solution, N
    bool transverse_stable = true;       // false flags the zigzag instability
    double min_transverse_curvature = 0.0; // softest transverse mode's w^2, (rad/s)^2
};

// Natural Coulomb length: ell^3 = e^2/(4 pi eps0 m_ref w_z,ref^2).
double length_scale(const TrapConfig& trap);

// Secular frequencies of `species` given the reference-species trap settings.
// Axial always scales as sqrt(m_ref/m). Radial follows trap.radial_model;
// throws PhysicsError if the scaled radial confinement is not positive.
SecularFrequencies species_frequencies(const TrapConfig& trap, const Species& species);

// Full 3-D potential: per-ion harmonic wells plus pairwise Coulomb.
// positions is 3xN (rows x,y,z; column per ion). Throws PhysicsError on
// coincident ions.
double potential_energy(const SpeciesChain& chain, const TrapConfig& trap,
                        const Eigen::Matrix3Xd& positions);

// -grad U, same layout as positions.
Eigen::Matrix3Xd potential_forces(const SpeciesChain& chain, const TrapConfig& trap,
                                  const Eigen::Matrix3Xd& positions);

// Axial equilibrium of the linear crystal. Damped Newton from an evenly
// spaced guess, gradient-descent fallback. The transverse Hessian is checked
// at the solution and the stability flag set accordingly.
ChainGeometry equilibrium_positions(const SpeciesChain& chain, const TrapConfig& trap);

} // namespace ionchain
