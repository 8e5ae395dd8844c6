#include "superarrival/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "superarrival/errors.hpp"
#include "superarrival/units.hpp"

namespace superarrival {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

double parse_number(const std::string& key, const std::string& value) {
    double out = 0.0;
    const char* begin = value.data();
    const char* end = begin + value.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc() || ptr != end || !std::isfinite(out)) {
        throw Error(ErrorKind::Config, "config: key '" + key + "' expects a number, got '" + value + "'");
    }
    return out;
}

std::uint64_t parse_count(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    const char* begin = value.data();
    const char* end = begin + value.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc() || ptr != end) {
        throw Error(ErrorKind::Config,
                    "config: key '" + key + "' expects a non-negative integer, got '" + value + "'");
    }
    return out;
}

namespace {

std::string violation(const std::string& inequality, double lhs, double rhs) {
    return "config: " + inequality + " violated (" + format_number(lhs) + " vs " + format_number(rhs) + ")";
}

}  // namespace

std::size_t ExperimentConfig::n_steps() const {
    return static_cast<std::size_t>(std::llround(t_end / grid.dt));
}

ExperimentConfig default_config() {
    ExperimentConfig c;
    // Nodes sit at half-integer multiples of dx, so barrier edges centred
    // on x = 0 with widths that are whole multiples of dx fall between nodes.
    c.grid = build_grid(-1.9999, 1.9999, 20000, 2e-6);
    c.packet = PacketSpec{};
    c.barrier.center = 0.0;
    c.barrier.width = 0.016;
    c.barrier.mode = RampMode::LinearRamp;
    c.barrier.t_p = 8e-4;
    c.barrier.epsilon = 2e-5;
    c.height_factor = 2.0;
    refresh_derived(c);
    return c;
}

void refresh_derived(ExperimentConfig& c) {
    if (c.grid.n_points >= 2) {
        c.grid.dx = (c.grid.x_max - c.grid.x_min) / static_cast<double>(c.grid.n_points - 1);
    }
    c.barrier.height0 = c.height_factor * derived_quantities(c.packet).energy;
}

std::vector<std::string> validate(const ExperimentConfig& c) {
    build_grid(c.grid.x_min, c.grid.x_max, c.grid.n_points, c.grid.dt);
    if (!(c.packet.sigma0 > 0.0)) throw Error(ErrorKind::Config, violation("sigma0 > 0", c.packet.sigma0, 0.0));
    if (!(c.packet.p0 > 0.0)) throw Error(ErrorKind::Config, violation("p0 > 0", c.packet.p0, 0.0));
    check_resolution(c.grid, c.packet.p0);
    if (!(c.height_factor > 0.0)) {
        throw Error(ErrorKind::Config, violation("barrier.height_factor > 0", c.height_factor, 0.0));
    }
    validate(c.barrier);

    const double left_edge = c.barrier.left_edge();
    if (!(c.packet.x0 + 3.0 * c.packet.sigma0 < left_edge)) {
        throw Error(ErrorKind::Config,
                    violation("x0 + 3*sigma0 < barrier left edge", c.packet.x0 + 3.0 * c.packet.sigma0, left_edge));
    }
    const double detector_limit = c.packet.x0 - 3.0 * c.packet.sigma0 / std::sqrt(2.0);
    if (!(c.detector_x <= detector_limit)) {
        throw Error(ErrorKind::Config, violation("detector_x <= x0 - 3*sigma0/sqrt(2)", c.detector_x, detector_limit));
    }
    if (!(c.detector_x > c.grid.x_min)) {
        throw Error(ErrorKind::Config, violation("detector_x > x_min", c.detector_x, c.grid.x_min));
    }
    if (!(c.barrier.right_edge() < c.grid.x_max)) {
        throw Error(ErrorKind::Config, violation("barrier right edge < x_max", c.barrier.right_edge(), c.grid.x_max));
    }
    if (!(c.t_end > 0.0)) throw Error(ErrorKind::Config, violation("t_end > 0", c.t_end, 0.0));
    if (c.barrier.mode == RampMode::LinearRamp && !(c.t_end > c.barrier.t_p + c.barrier.epsilon)) {
        throw Error(ErrorKind::Config,
                    violation("t_end > t_p + epsilon", c.t_end, c.barrier.t_p + c.barrier.epsilon));
    }
    if (c.sample_stride < 1) throw Error(ErrorKind::Config, "config: sample_stride >= 1 violated");
    if (!(c.deviation_threshold > 0.0)) {
        throw Error(ErrorKind::Config, violation("delta > 0", c.deviation_threshold, 0.0));
    }
    const double w_s = c.classical.edge_half_width;
    if (!(w_s > 0.0)) throw Error(ErrorKind::Config, violation("classical.w_s > 0", w_s, 0.0));
    if (!(c.barrier.width > 2.0 * w_s)) {
        throw Error(ErrorKind::Config, violation("barrier.width > 2*classical.w_s", c.barrier.width, 2.0 * w_s));
    }
    if (c.classical.n_particles < 1) throw Error(ErrorKind::Config, "config: classical.n >= 1 violated");

    std::vector<std::string> warnings;
    // Free-packet spreading over the run, sigma(t)/sigma0 = sqrt(1 + (t/sigma0^2)^2).
    const double s2 = c.packet.sigma0 * c.packet.sigma0;
    const double spread = std::sqrt(1.0 + std::pow(c.t_end / s2, 2));
    if (spread >= 1.01) {
        warnings.push_back("packet spreading not negligible: sigma(t_end)/sigma0 = " + format_number(spread) +
                           " >= 1.01");
    }
    if (auto w = barrier_resolution_warning(c.barrier, c.grid); !w.empty()) warnings.push_back(w);
    if (c.classical.n_particles < 10000) {
        warnings.push_back("classical.n < 1e4: classical statistical error above ~1%");
    }
    return warnings;
}

void apply_key(ExperimentConfig& c, const std::string& key, const std::string& value) {
    if (key == "x0") c.packet.x0 = parse_number(key, value);
    else if (key == "sigma0") c.packet.sigma0 = parse_number(key, value);
    else if (key == "p0") c.packet.p0 = parse_number(key, value);
    else if (key == "barrier.center") c.barrier.center = parse_number(key, value);
    else if (key == "barrier.width") c.barrier.width = parse_number(key, value);
    else if (key == "barrier.height_factor") c.height_factor = parse_number(key, value);
    else if (key == "barrier.mode") {
        if (value == "static") c.barrier.mode = RampMode::Static;
        else if (value == "linear_ramp") c.barrier.mode = RampMode::LinearRamp;
        else throw Error(ErrorKind::Config, "config: key 'barrier.mode' expects static|linear_ramp, got '" + value + "'");
    }
    else if (key == "t_p") c.barrier.t_p = parse_number(key, value);
    else if (key == "epsilon") c.barrier.epsilon = parse_number(key, value);
    else if (key == "detector_x") c.detector_x = parse_number(key, value);
    else if (key == "t_end") c.t_end = parse_number(key, value);
    else if (key == "dt") c.grid.dt = parse_number(key, value);
    else if (key == "n_points") c.grid.n_points = parse_count(key, value);
    else if (key == "x_min") c.grid.x_min = parse_number(key, value);
    else if (key == "x_max") c.grid.x_max = parse_number(key, value);
    else if (key == "sample_stride") c.sample_stride = parse_count(key, value);
    else if (key == "seed") c.rng_seed = parse_count(key, value);
    else if (key == "delta") c.deviation_threshold = parse_number(key, value);
    else if (key == "classical.n") c.classical.n_particles = parse_count(key, value);
    else if (key == "classical.w_s") c.classical.edge_half_width = parse_number(key, value);
    else if (key == "classical.sigma_p") c.classical.sigma_p = parse_number(key, value);
    else throw Error(ErrorKind::Config, "config: unknown key '" + key + "'");
    refresh_derived(c);
}

std::vector<std::pair<std::string, std::string>> parse_key_values(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw Error(ErrorKind::Config, "config: line " + std::to_string(line_no) + " is not key=value");
        }
        out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return out;
}

ExperimentConfig parse_config(const std::string& text, ExperimentConfig base) {
    for (const auto& [key, value] : parse_key_values(text)) apply_key(base, key, value);
    return base;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Config, "config not found: " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", value);
    return buf;
}

std::vector<std::pair<std::string, std::string>> config_entries(const ExperimentConfig& c) {
    auto num = [](double v) { return format_number(v); };
    return {
        {"x0", num(c.packet.x0)},
        {"sigma0", num(c.packet.sigma0)},
        {"p0", num(c.packet.p0)},
        {"barrier.center", num(c.barrier.center)},
        {"barrier.width", num(c.barrier.width)},
        {"barrier.height_factor", num(c.height_factor)},
        {"barrier.mode", to_string(c.barrier.mode)},
        {"t_p", num(c.barrier.t_p)},
        {"epsilon", num(c.barrier.epsilon)},
        {"detector_x", num(c.detector_x)},
        {"t_end", num(c.t_end)},
        {"dt", num(c.grid.dt)},
        {"n_points", std::to_string(c.grid.n_points)},
        {"x_min", num(c.grid.x_min)},
        {"x_max", num(c.grid.x_max)},
        {"sample_stride", std::to_string(c.sample_stride)},
        {"seed", std::to_string(c.rng_seed)},
        {"delta", num(c.deviation_threshold)},
        {"classical.n", std::to_string(c.classical.n_particles)},
        {"classical.w_s", num(c.classical.edge_half_width)},
        {"classical.sigma_p", num(c.classical.sigma_p)},
    };
}

std::string format_config(const ExperimentConfig& c) {
    std::string out;
    for (const auto& [key, value] : config_entries(c)) out += key + "=" + value + "\n";
    return out;
}

}  // namespace superarrival
