#pragma once

#include <numbers>

namespace swmod {

// CODATA 2018. The values are fixed on purpose: every golden number in the
// test suite and every manifest a user has archived depends on them.
struct PhysicalConstants {
    double electron_mass;      // kg
    double elementary_charge;  // C
    double speed_of_light;     // m/s
    double hbar;               // J s

    static constexpr PhysicalConstants codata2018() {
        return {9.1093837015e-31, 1.602176634e-19, 299792458.0,
                6.62607015e-34 / (2.0 * std::numbers::pi)};
    }
};

// 1 eV in joules (exact since the 2019 SI redefinition).
inline constexpr double kElectronVolt = 1.602176634e-19;

}  // namespace swmod
