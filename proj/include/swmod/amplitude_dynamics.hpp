#pragma once

#include <complex>
#include <limits>
#include <span>
#include <vector>

#include "swmod/physical_model.hpp"

namespace swmod {

// Full keeps the periodic WKB phase factors exp(+-i (V0/4E) sin qy) on the
// couplings; Simplified drops them (they are O(V0/E) corrections).
enum class RhsVariant { simplified, full };

enum class PhaseMethod { exact_quadrature, first_order };

struct LadderConfig {
    int n_max = 4;
    RhsVariant rhs_variant = RhsVariant::simplified;
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    double max_step = std::numeric_limits<double>::infinity();  // in y_hat units

    void validate() const;  // n_max >= 1, tolerances in (0, 1e-3]
};

// Complex sideband amplitudes a_n, n in [-n_max, n_max], at dimensionless
// position y_hat = q * y.
struct AmplitudeState {
    double position = 0.0;
    std::vector<std::complex<double>> amplitudes;

    int n_max() const { return (static_cast<int>(amplitudes.size()) - 1) / 2; }
    std::complex<double>& at(int n) { return amplitudes[static_cast<size_t>(n + n_max())]; }
    const std::complex<double>& at(int n) const {
        return amplitudes[static_cast<size_t>(n + n_max())];
    }
    double norm() const;  // sum_n |a_n|^2

    // a_0 = 1, everything else 0: the instantaneous turn-on initial condition.
    static AmplitudeState ground(int n_max, double position = 0.0);
};

struct EvolutionResult {
    std::vector<AmplitudeState> trajectory;  // at the requested output positions
    double norm_drift = 0.0;                 // max |norm - initial norm| over trajectory
    long step_count = 0;
    double boundary_occupation = 0.0;  // max |a_{+-n_max}|^2 seen; > 1e-12 means the
                                       // hard-wall truncation is being exercised
};

// Semiclassical phase (1/hbar) int_0^y sqrt(p_n^2 - 2 m V0 cos q y') dy'.
// FirstOrder uses the expansion p_n y/hbar - (V0/2E)(p_n/hbar q) sin qy.
// Throws TurningPoint when the radicand is nonpositive anywhere on [0, y].
double wkb_phase(double y, int n, const BeamSpec& beam, const DerivedParams& dp,
                 const PhysicalConstants& pc, PhaseMethod method);

// d a_n / d y_hat for the coupled sideband ladder:
//   -gamma [ a_{n+1} e^{i phi_n(y_hat)} - a_{n-1} e^{-i phi_{n-1}(y_hat)} ]
// with phi_n = ((p_{n+1}-p_n)/(hbar q) - 1) y_hat (+ (V0/4E) sin y_hat for Full)
// and hard-wall boundaries a_{+-(n_max+1)} = 0. Exact ladder momenta are used,
// so the pi/L recoil detuning emerges from the exponents instead of being
// inserted by hand.
std::vector<std::complex<double>> rhs(const AmplitudeState& state, const LadderConfig& cfg,
                                      const DerivedParams& dp, const BeamSpec& beam,
                                      const PhysicalConstants& pc);

// Adaptive integration of the ladder from state.position to y_hat_end with
// dense output at output_positions (ascending, within range).
EvolutionResult evolve(const AmplitudeState& initial, double y_hat_end, const LadderConfig& cfg,
                       const DerivedParams& dp, const BeamSpec& beam, const PhysicalConstants& pc,
                       std::span<const double> output_positions);

// First-order amplitude for a single sideband after an instantaneous turn-on:
//   (e eps0 / 4 hbar omega)(V0/E) e^{i k y/2} sin(k y/2) / k,
//   k = (p - p_{+-1} +- hbar q)/hbar  (exact ladder momenta).
// The k -> 0 singularity is removable and handled by a series branch.
std::complex<double> perturbative_a_pm1(double y, Branch branch, const DerivedParams& dp,
                                        const BeamSpec& beam, const TravelingWaveSpec& tw,
                                        const PhysicalConstants& pc);

// |a_{+1}(y)| / |a_{-1}(y)| from the closed form. Returns +inf when the
// emission amplitude underflows (|a_{-1}| < 1e-30), 1 when both vanish (y=0).
double asymmetry_ratio(double y, const DerivedParams& dp, const BeamSpec& beam,
                       const TravelingWaveSpec& tw, const PhysicalConstants& pc);

}  // namespace swmod
