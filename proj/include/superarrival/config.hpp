#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "superarrival/barrier.hpp"
#include "superarrival/grid.hpp"
#include "superarrival/packet.hpp"

namespace superarrival {

/// Parameters of the classical ensemble run.
struct ClassicalParams {
    std::size_t n_particles = 100000;
    double edge_half_width = 0.001;  // w_s of the smoothed barrier edges
    double sigma_p = 0.0;            // <= 0 means 1/(2 sigma0)
};

/// Everything one (static or perturbed) run needs.
struct ExperimentConfig {
    Grid grid;
    PacketSpec packet;
    BarrierSchedule barrier;  // mode is LinearRamp for the perturbed run
    double height_factor = 2.0;
    double detector_x = -0.4;
    double t_end = 4e-3;
    std::size_t sample_stride = 1;
    std::uint64_t rng_seed = 12345;
    double deviation_threshold = 1e-4;
    ClassicalParams classical;

    std::size_t n_steps() const;
};

/// The default experiment: perturbed barrier with the smallest swept epsilon.
ExperimentConfig default_config();

/// Recomputes grid.dx and barrier.height0 = height_factor * E from the raw fields.
void refresh_derived(ExperimentConfig& config);

/// Throws Error(Config / Resolution) naming the violated inequality.
/// Returns non-fatal warnings.
std::vector<std::string> validate(const ExperimentConfig& config);

/// Flat key=value text. Unknown keys and malformed values are errors.
/// '#' starts a comment. Keys not present keep their defaults.
ExperimentConfig parse_config(const std::string& text, ExperimentConfig base = default_config());
ExperimentConfig load_config(const std::filesystem::path& path);

/// Applies one key=value assignment; throws Error(Config) naming the key.
void apply_key(ExperimentConfig& config, const std::string& key, const std::string& value);

/// Every config key with its value, in a fixed order.
std::vector<std::pair<std::string, std::string>> config_entries(const ExperimentConfig& config);
std::string format_config(const ExperimentConfig& config);

/// Scientific notation with 17 significant digits (round-trips a double).
std::string format_number(double value);

/// Strict number parsers; throw Error(Config) naming the key.
double parse_number(const std::string& key, const std::string& value);
std::uint64_t parse_count(const std::string& key, const std::string& value);

/// Parses "key=value" lines into an ordered map; comments and blank lines
/// are dropped. Throws Error(Config) on lines without '='.
std::vector<std::pair<std::string, std::string>> parse_key_values(const std::string& text);

}  // namespace superarrival
