#include "swmod/physical_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "swmod/errors.hpp"

namespace swmod {

namespace {
constexpr double kPi = std::numbers::pi;

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}
}  // namespace

double StandingWaveSpec::angular_frequency(const PhysicalConstants& pc) const {
    return 2.0 * kPi * pc.speed_of_light / wavelength;
}

double StandingWaveSpec::wave_number() const { return 2.0 * kPi / wavelength; }

double StandingWaveSpec::grating_number() const { return 2.0 * wave_number(); }

double StandingWaveSpec::vector_potential_amplitude() const {
    return -field_amplitude * wavelength;
}

void StandingWaveSpec::validate() const {
    require(std::isfinite(field_amplitude) && field_amplitude >= 0.0,
            "standing wave: field amplitude must be >= 0");
    require(std::isfinite(wavelength) && wavelength > 0.0,
            "standing wave: wavelength must be > 0");
}

double TravelingWaveSpec::wave_number(const PhysicalConstants& pc) const {
    return angular_frequency / pc.speed_of_light;
}

double TravelingWaveSpec::vector_potential_amplitude(const PhysicalConstants& pc) const {
    return -field_amplitude * pc.speed_of_light / angular_frequency;
}

void TravelingWaveSpec::validate() const {
    require(std::isfinite(field_amplitude) && field_amplitude >= 0.0,
            "traveling wave: field amplitude must be >= 0");
    require(std::isfinite(angular_frequency) && angular_frequency > 0.0,
            "traveling wave: angular frequency must be > 0");
}

double BeamSpec::momentum(const PhysicalConstants& pc) const {
    return std::sqrt(2.0 * pc.electron_mass * kinetic_energy);
}

BeamSpec BeamSpec::from_energy(double kinetic_energy_J, double current_A, double width_x_m,
                               double width_z_m, double velocity_spread_m_per_s,
                               const PhysicalConstants& pc) {
    BeamSpec beam;
    beam.kinetic_energy = kinetic_energy_J;
    beam.total_current = current_A;
    beam.width_x = width_x_m;
    beam.width_z = width_z_m;
    beam.velocity_spread = velocity_spread_m_per_s;
    beam.mean_velocity = std::sqrt(2.0 * kinetic_energy_J / pc.electron_mass);
    beam.validate(pc);
    return beam;
}

BeamSpec BeamSpec::from_velocity(double mean_velocity_m_per_s, double current_A, double width_x_m,
                                 double width_z_m, double velocity_spread_m_per_s,
                                 const PhysicalConstants& pc) {
    BeamSpec beam;
    beam.mean_velocity = mean_velocity_m_per_s;
    beam.kinetic_energy = 0.5 * pc.electron_mass * mean_velocity_m_per_s * mean_velocity_m_per_s;
    beam.total_current = current_A;
    beam.width_x = width_x_m;
    beam.width_z = width_z_m;
    beam.velocity_spread = velocity_spread_m_per_s;
    beam.validate(pc);
    return beam;
}

void BeamSpec::validate(const PhysicalConstants& pc) const {
    require(std::isfinite(kinetic_energy) && kinetic_energy > 0.0, "beam: energy must be > 0");
    require(std::isfinite(total_current) && total_current >= 0.0, "beam: current must be >= 0");
    require(std::isfinite(width_x) && width_x > 0.0, "beam: width_x must be > 0");
    require(std::isfinite(width_z) && width_z > 0.0, "beam: width_z must be > 0");
    require(std::isfinite(velocity_spread) && velocity_spread >= 0.0,
            "beam: velocity spread must be >= 0");
    require(velocity_spread < 0.1 * mean_velocity, "beam: velocity spread must be < 0.1 v0");
    const double v_from_E = std::sqrt(2.0 * kinetic_energy / pc.electron_mass);
    require(std::abs(mean_velocity - v_from_E) <= 1e-12 * v_from_E,
            "beam: mean velocity inconsistent with kinetic energy");
    require(mean_velocity < 0.1 * pc.speed_of_light,
            "beam: nonrelativistic guard v0 < 0.1 c violated");
}

double effective_potential(const StandingWaveSpec& sw, const PhysicalConstants& pc) {
    const double ea = pc.elementary_charge * sw.vector_potential_amplitude();
    return ea * ea / (2.0 * pc.electron_mass * pc.speed_of_light * pc.speed_of_light);
}

double modulation_length_at(double velocity, double angular_frequency,
                            const PhysicalConstants& pc) {
    const double p = pc.electron_mass * velocity;
    return 2.0 * kPi * p * velocity * velocity / (pc.hbar * angular_frequency * angular_frequency);
}

double modulation_length(const BeamSpec& beam, const TravelingWaveSpec& tw,
                         const PhysicalConstants& pc) {
    return modulation_length_at(beam.mean_velocity, tw.angular_frequency, pc);
}

double detuning(double velocity, const DerivedParams& dp, Branch branch) {
    if (!(velocity > 0.0)) throw std::invalid_argument("detuning: velocity must be > 0");
    const auto pc = PhysicalConstants::codata2018();
    const double L = modulation_length_at(velocity, dp.angular_frequency, pc);
    return dp.angular_frequency / velocity - dp.grating_number - sign(branch) * kPi / L;
}

DerivedParams derive_params(const StandingWaveSpec& sw, const TravelingWaveSpec& tw,
                            const BeamSpec& beam, const PhysicalConstants& pc) {
    sw.validate();
    tw.validate();
    beam.validate(pc);

    DerivedParams dp;
    dp.effective_potential = effective_potential(sw, pc);
    dp.grating_number = sw.grating_number();
    dp.angular_frequency = tw.angular_frequency;
    dp.design_velocity = beam.mean_velocity;

    const double energy = beam.kinetic_energy;
    dp.dimensionless_potential = dp.effective_potential / energy;
    dp.photon_ratio = pc.hbar * tw.angular_frequency / energy;
    dp.coupling_rate = pc.elementary_charge * tw.field_amplitude /
                       (8.0 * pc.hbar * tw.angular_frequency) * dp.dimensionless_potential;
    dp.dimensionless_coupling = dp.coupling_rate / dp.grating_number;
    dp.modulation_length = modulation_length(beam, tw, pc);
    dp.detuning_plus = detuning(beam.mean_velocity, dp, Branch::plus);
    dp.detuning_minus = detuning(beam.mean_velocity, dp, Branch::minus);
    dp.nonperturbative_potential = dp.dimensionless_potential >= 0.1;
    dp.nonperturbative_recoil = dp.photon_ratio >= 0.1;
    return dp;
}

std::vector<double> momentum_ladder(const BeamSpec& beam, const TravelingWaveSpec& tw,
                                    const PhysicalConstants& pc, int n_max) {
    if (n_max < 0) throw std::invalid_argument("momentum_ladder: n_max must be >= 0");
    const double p0 = beam.momentum(pc);
    const double quantum = 2.0 * pc.electron_mass * pc.hbar * tw.angular_frequency;
    std::vector<double> ladder;
    ladder.reserve(static_cast<size_t>(2 * n_max + 1));
    for (int n = -n_max; n <= n_max; ++n) {
        const double radicand = p0 * p0 + static_cast<double>(n) * quantum;
        if (!(radicand > 0.0)) {
            throw LadderUnderflow("momentum ladder underflow at n = " + std::to_string(n) +
                                  ": beam too slow for this sideband");
        }
        ladder.push_back(std::sqrt(radicand));
    }
    return ladder;
}

double resonance_velocity(const DerivedParams& dp, Branch branch) {
    const auto pc = PhysicalConstants::codata2018();
    const double omega = dp.angular_frequency;
    const double q = dp.grating_number;
    if (!(omega > 0.0) || !(q > 0.0)) throw NoResonance("resonance: invalid omega or q");

    double v = omega / q;
    const int max_iterations = 200;
    bool converged = false;
    for (int i = 0; i < max_iterations; ++i) {
        const double denom = q + sign(branch) * kPi / modulation_length_at(v, omega, pc);
        if (!(denom > 0.0)) throw NoResonance("resonance: q -+ pi/L not positive");
        const double next = omega / denom;
        if (!std::isfinite(next) || next <= 0.0) throw NoResonance("resonance: iteration diverged");
        const double change = std::abs(next - v);
        v = next;
        if (change <= 1e-12 * v) {
            converged = true;
            break;
        }
    }
    if (!converged) throw NoResonance("resonance: fixed point did not converge");
    if (v >= 0.1 * pc.speed_of_light)
        throw NoResonance("resonance: velocity outside the nonrelativistic guard");
    return v;
}

}  // namespace swmod
