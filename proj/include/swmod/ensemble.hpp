#pragma once

#include <complex>
#include <span>
#include <vector>

#include "swmod/current_field.hpp"
#include "swmod/physical_model.hpp"

namespace swmod {

// Gaussian velocity distribution F(v) = exp(-(v-v0)^2/dv^2) / (sqrt(pi) dv).
struct VelocityDistribution {
    double mean = 0.0;    // v0, m/s
    double spread = 0.0;  // dv, m/s

    double pdf(double v) const;
    void validate() const;  // spread > 0, spread < 0.1 mean
};

enum class QuadratureScheme { adaptive_gauss_kronrod, gauss_hermite };

struct QuadratureSpec {
    QuadratureScheme scheme = QuadratureScheme::adaptive_gauss_kronrod;
    double rel_tol = 1e-10;
    int node_count = 128;               // Gauss-Hermite order
    double integration_halfwidth = 8.0; // in multiples of the spread

    void validate() const;  // rel_tol in (0, 1e-4], node_count >= 16
};

struct AveragedCurrentSample {
    SpaceTimePoint point;
    double averaged_current_density = 0.0;  // A/m^2
    std::complex<double> f_plus{0.0, 0.0};
    std::complex<double> f_minus{0.0, 0.0};
};

// Velocity average of one sideband's sinc-phase factor:
//   f_{+-1}(y) = 2 int F(v) [sin(D y/2)/D] exp(-i D y/2) dv,  D = D_{+-1}(v),
// with both the omega/v and the pi/L(v) velocity dependence kept.
std::complex<double> f_pm1(double y, Branch branch, const VelocityDistribution& dist,
                           const DerivedParams& dp, const QuadratureSpec& quad);

// j = j0 [1 - (e eps0/4 hbar omega)(V0/E) Re{ e^{i phi} (f_{+1} - f_{-1}) }].
// Reduces to the monochromatic form as spread -> 0.
AveragedCurrentSample averaged_current(const SpaceTimePoint& point,
                                       const VelocityDistribution& dist, const DerivedParams& dp,
                                       const BeamProfile& profile, const QuadratureSpec& quad);

// max_t |j_avg/j0 - 1| at position y, by a dense t-scan over one optical
// period (the f_{+-1} quadratures are hoisted out of the scan).
double averaged_modulation_depth(double y, const VelocityDistribution& dist,
                                 const DerivedParams& dp, const QuadratureSpec& quad,
                                 int t_samples = 4096);

struct CoherencePoint {
    double y = 0.0;
    double averaged_depth = 0.0;
};

std::vector<CoherencePoint> coherence_scan(std::span<const double> y_grid,
                                           const VelocityDistribution& dist,
                                           const DerivedParams& dp, const QuadratureSpec& quad,
                                           int t_samples = 4096);

}  // namespace swmod
