#include "ionchain/species.hpp"

#include <set>

#include "ionchain/constants.hpp"
#include "ionchain/errors.hpp"

namespace ionchain {

double Species::mass_kg() const { return mass_amu * constants::atomic_mass_unit; }

bool operator==(const Species& a, const Species& b) {
    return a.name == b.name && a.mass_amu == b.mass_amu;
}

void TrapConfig::validate() const {
    if (reference_species.mass_amu <= 0.0)
        throw ValidationError("trap: reference species mass must be positive");
    if (axial_frequency <= 0.0)
        throw ValidationError("trap: axial frequency must be positive");
    if (radial_frequency_x <= 0.0 || radial_frequency_y <= 0.0)
        throw ValidationError("trap: radial frequencies must be positive");
}

void SpeciesChain::validate() const {
    if (ions.empty())
        throw ValidationError("chain: must contain at least one ion");
    std::set<std::string> seen_names;
    for (const auto& s : ions) {
        if (s.mass_amu <= 0.0)
            throw ValidationError("chain: species '" + s.name + "' has non-positive mass");
        seen_names.insert(s.name);
    }
    // distinct names must map to one mass each
    for (const auto& name : seen_names) {
        double mass = -1.0;
        for (const auto& s : ions) {
            if (s.name != name) continue;
            if (mass < 0.0) mass = s.mass_amu;
            else if (mass != s.mass_amu)
                throw ValidationError("chain: species name '" + name +
                                      "' used with two different masses");
        }
    }
}

} // namespace ionchain
