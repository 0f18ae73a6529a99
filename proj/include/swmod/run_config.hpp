#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "swmod/amplitude_dynamics.hpp"
#include "swmod/current_field.hpp"
#include "swmod/ensemble.hpp"
#include "swmod/physical_model.hpp"

namespace swmod {

inline constexpr const char* kToolVersion = "0.1.0";

struct SweepSection {
    std::string parameter_path;  // dotted key path, e.g. traveling_wave.epsilon0_V_per_m
    std::vector<double> values;
};

// Parsed and validated run configuration. Key paths and unit suffixes are the
// file-format contract; see README for the schema.
struct RunConfig {
    StandingWaveSpec standing_wave;
    TravelingWaveSpec traveling_wave;

    double beam_energy_eV = 0.0;
    double beam_current_A = 0.0;
    double beam_width_x_m = 0.0;
    double beam_width_z_m = 0.0;
    double beam_dv_over_v = 0.0;

    LadderConfig ladder;
    double interaction_length_m = 0.0;
    int output_points = 64;

    std::optional<SweepSection> sweep;

    nlohmann::json raw;  // config echo for the manifest

    BeamSpec beam(const PhysicalConstants& pc = PhysicalConstants::codata2018()) const;
    BeamProfile profile() const;
    VelocityDistribution distribution(
        const PhysicalConstants& pc = PhysicalConstants::codata2018()) const;
};

// Throws ConfigError with the offending key path (and, best effort, the line
// in the file) on parse or validation failure.
RunConfig parse_run_config(const std::string& text, const std::string& filename = "<config>");
RunConfig load_run_config(const std::string& path);

nlohmann::json build_manifest(const RunConfig& cfg, const DerivedParams& dp, double wall_seconds,
                              std::optional<unsigned long long> seed = std::nullopt);

// Shortest representation that round-trips through a double exactly.
std::string format_double(double value);

// --- command payloads (pure; the CLI adds file IO around them) ---

std::string render_evolve_csv(const RunConfig& cfg, const DerivedParams& dp,
                              const EvolutionResult& result);
EvolutionResult run_evolve(const RunConfig& cfg, const DerivedParams& dp);

std::string render_current_csv(const RunConfig& cfg, const DerivedParams& dp,
                               int t_samples_per_period = 8);

struct SweepRow {
    double value = 0.0;
    std::optional<double> depth_mono;
    std::optional<double> depth_avg;
    std::string status = "ok";
};

// Evaluates sweep rows (summary statistic: modulation depth at the interaction
// length, monochromatic and velocity-averaged) with at most `jobs` concurrent
// workers. Row order always follows sweep.values.
std::vector<SweepRow> run_sweep(const RunConfig& cfg, int jobs);
std::string render_sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace swmod
