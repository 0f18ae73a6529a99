#pragma once

#include "swmod/physical_model.hpp"

namespace swmod {

struct BeamProfile {
    double total_current = 0.0;  // I0, A
    double width_x = 0.0;        // a, m
    double width_z = 0.0;        // b, m

    void validate() const;
};

struct SpaceTimePoint {
    double x = 0.0;  // m
    double y = 0.0;  // m
    double z = 0.0;  // m
    double t = 0.0;  // s
};

struct CurrentSample {
    SpaceTimePoint point;
    double current_density = 0.0;      // j, A/m^2
    double relative_modulation = 0.0;  // j/j0 - 1
    bool regime_violation = false;     // j < 0: the first-order form was pushed
                                       // outside its validity region
};

// Gaussian transverse profile, j0 = I0/(pi a b) exp(-x^2/a^2 - z^2/b^2).
double beam_profile_j0(const BeamProfile& profile, double x, double z);

// phi = omega t - q y - k z - (V0/2E) sin qy.
double phase_phi(const SpaceTimePoint& point, const DerivedParams& dp,
                 const PhysicalConstants& pc);

// Monochromatic current density with both first-order sidebands interfering
// with the n=0 component:
//   j = j0 [1 - (e eps0/2 hbar omega)(V0/E)
//            ( sinc_+ cos(phi - D_{+1} y/2) - sinc_- cos(phi - D_{-1} y/2) )],
//   sinc_+- = sin(D_{+-1} y/2) / D_{+-1}.
CurrentSample current_density(const SpaceTimePoint& point, const DerivedParams& dp,
                              const BeamSpec& beam, const TravelingWaveSpec& tw,
                              const PhysicalConstants& pc, const BeamProfile& profile);

// max_t |j/j0 - 1| on axis at position y (closed-form envelope of the two
// sinc terms; cross-checked against a dense t-scan in the tests).
double modulation_depth(double y, const DerivedParams& dp, const BeamSpec& beam,
                        const TravelingWaveSpec& tw, const PhysicalConstants& pc);

// sin(D y/2)/D with the removable D -> 0 singularity handled by a series.
double sinc_half(double detuning_value, double y);

}  // namespace swmod
