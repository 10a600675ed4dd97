#pragma once

#include <string>
#include <vector>

namespace ionchain {

// One ion species: a label and its mass in unified atomic mass units.
struct Species {
    std::string name;
    double mass_amu = 0.0;

    double mass_kg() const;
};

bool operator==(const Species& a, const Species& b);

enum class RadialModel {
    DirectPerSpecies,       // configured radial frequencies used as-is
    PseudopotentialScaling, // RF radial ~ 1/m with static defocus ~ 1/sqrt(m)
};

// Trap secular frequencies are specified for one reference species; other
// species follow the mass scaling selected by `radial_model`. Angular
// frequencies (rad/s) throughout.
struct TrapConfig {
    Species reference_species;
    double axial_frequency = 0.0;     // omega_z of the reference species
    double radial_frequency_x = 0.0;  // transverse principal axis 1
    double radial_frequency_y = 0.0;  // transverse principal axis 2
    RadialModel radial_model = RadialModel::PseudopotentialScaling;

    void validate() const; // throws ValidationError
};

// Ordered ion chain; index = axial order, left to right.
struct SpeciesChain {
    std::vector<Species> ions;

    std::size_t size() const { return ions.size(); }
    void validate() const; // throws ValidationError
};

} // namespace ionchain
