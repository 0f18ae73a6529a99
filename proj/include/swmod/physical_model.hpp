#pragma once

#include <vector>

#include "swmod/constants.hpp"

namespace swmod {

// Which sideband the traveling wave feeds: +1 absorbs a photon, -1 emits one.
enum class Branch : int { plus = +1, minus = -1 };

inline constexpr int sign(Branch b) { return static_cast<int>(b); }

// Two counterpropagating waves of field strength eps1 along y; their
// superposition is the optical grating the electron scatters from.
struct StandingWaveSpec {
    double field_amplitude = 0.0;  // eps1, V/m
    double wavelength = 0.0;       // lambda1, m

    double angular_frequency(const PhysicalConstants& pc) const;  // 2 pi c / lambda1
    double wave_number() const;                                   // k1 = 2 pi / lambda1
    double grating_number() const;                                // q = 2 k1
    double vector_potential_amplitude() const;                    // A01 = -eps1 lambda1

    void validate() const;
};

// The copropagating modulating wave. Note the vector-potential convention
// A02 = -eps0 c / omega differs from the standing wave's A01 = -eps1 lambda1
// by 2 pi; both are kept as-is because V0 and the coupling rate are anchored
// to them (see README, physics notes).
struct TravelingWaveSpec {
    double field_amplitude = 0.0;    // eps0, V/m
    double angular_frequency = 0.0;  // omega, rad/s

    double wave_number(const PhysicalConstants& pc) const;                      // omega / c
    double vector_potential_amplitude(const PhysicalConstants& pc) const;       // -eps0 c / omega

    void validate() const;
};

struct BeamSpec {
    double kinetic_energy = 0.0;   // J
    double total_current = 0.0;    // A
    double width_x = 0.0;          // a, m
    double width_z = 0.0;          // b, m
    double mean_velocity = 0.0;    // v0, m/s
    double velocity_spread = 0.0;  // dv, m/s

    double momentum(const PhysicalConstants& pc) const;  // p0 = sqrt(2 m E)

    static BeamSpec from_energy(double kinetic_energy_J, double current_A, double width_x_m,
                                double width_z_m, double velocity_spread_m_per_s,
                                const PhysicalConstants& pc = PhysicalConstants::codata2018());
    static BeamSpec from_velocity(double mean_velocity_m_per_s, double current_A, double width_x_m,
                                  double width_z_m, double velocity_spread_m_per_s,
                                  const PhysicalConstants& pc = PhysicalConstants::codata2018());

    // Throws std::invalid_argument on violated invariants: E > 0, widths > 0,
    // 0 <= dv < 0.1 v0, v0 consistent with E to 1e-12, v0 < 0.1 c.
    void validate(const PhysicalConstants& pc = PhysicalConstants::codata2018()) const;
};

// The dimensionless engine parameters everything downstream runs on.
struct DerivedParams {
    double effective_potential = 0.0;     // V0 = (e A01)^2 / (2 m c^2), J
    double grating_number = 0.0;          // q = 2 k1, 1/m
    double coupling_rate = 0.0;           // Gamma = (e eps0 / 8 hbar omega) (V0/E), 1/m
    double modulation_length = 0.0;       // L at the design velocity, m
    double dimensionless_coupling = 0.0;  // gamma = Gamma / q
    double dimensionless_potential = 0.0; // eta = V0 / E
    double photon_ratio = 0.0;            // rho = hbar omega / E

    double angular_frequency = 0.0;  // omega of the traveling wave, rad/s
    double design_velocity = 0.0;    // beam v0, m/s
    double detuning_plus = 0.0;      // D_{+1}(v0), 1/m
    double detuning_minus = 0.0;     // D_{-1}(v0), 1/m

    // Perturbative-regime flags; set (not fatal) when eta >= 0.1 or rho >= 0.1.
    bool nonperturbative_potential = false;
    bool nonperturbative_recoil = false;
};

// V0 >= 0, zero iff eps1 = 0.
double effective_potential(const StandingWaveSpec& sw, const PhysicalConstants& pc);

DerivedParams derive_params(const StandingWaveSpec& sw, const TravelingWaveSpec& tw,
                            const BeamSpec& beam, const PhysicalConstants& pc);

// L = 2 pi p v^2 / (hbar omega^2): the length over which the quantum-recoil
// phase accumulates pi and the absorption/emission channels separate.
double modulation_length(const BeamSpec& beam, const TravelingWaveSpec& tw,
                         const PhysicalConstants& pc);

// Same, as a function of velocity (used by detuning and the resonance solve).
double modulation_length_at(double velocity, double angular_frequency,
                            const PhysicalConstants& pc);

// p_n = sqrt(p0^2 + 2 m n hbar omega) for n in [-n_max, n_max], exact.
// Throws LadderUnderflow when a radicand is nonpositive.
std::vector<double> momentum_ladder(const BeamSpec& beam, const TravelingWaveSpec& tw,
                                    const PhysicalConstants& pc, int n_max);

// D_{+-1}(v) = omega/v - q -+ pi/L(v). L is evaluated at v, so the recoil term
// tracks the velocity consistently with the exact-ladder convention.
double detuning(double velocity, const DerivedParams& dp, Branch branch);

// Solves omega/v = q +- pi/L(v) by fixed-point iteration (rel tol 1e-12,
// max 200 iterations). Throws NoResonance on divergence or an unphysical root.
double resonance_velocity(const DerivedParams& dp, Branch branch);

}  // namespace swmod
