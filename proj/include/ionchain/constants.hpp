#pragma once

// Physical constants, CODATA 2018 / SI-2019 exact values where applicable.
// All internal computation is SI; unit conversions happen only at I/O
// boundaries.

namespace ionchain::constants {

inline constexpr double pi = 3.14159265358979323846;

inline constexpr double elementary_charge = 1.602176634e-19;   // C (exact)
inline constexpr double vacuum_permittivity = 8.8541878128e-12; // F/m
inline constexpr double hbar = 1.054571817e-34;                // J s
inline constexpr double boltzmann = 1.380649e-23;              // J/K (exact)
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg

// e^2 / (4 pi eps0): the Coulomb pair energy is this over the separation.
inline constexpr double coulomb_coefficient =
    elementary_charge * elementary_charge /
    (4.0 * pi * vacuum_permittivity);

} // namespace ionchain::constants
