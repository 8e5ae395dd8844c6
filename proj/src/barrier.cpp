#include "superarrival/barrier.hpp"

#include <cmath>

#include "superarrival/errors.hpp"

namespace superarrival {

namespace {

// Nodes within roundoff of an edge count as inside.
constexpr double kEdgeSlack = 1e-9;

}  // namespace

void validate(const BarrierSchedule& s) {
    if (!(s.width > 0.0)) throw Error(ErrorKind::Config, "barrier: width > 0 violated");
    if (!(s.height0 > 0.0)) throw Error(ErrorKind::Config, "barrier: height0 > 0 violated");
    if (s.mode == RampMode::LinearRamp) {
        if (!(s.t_p > 0.0)) throw Error(ErrorKind::Config, "barrier: t_p > 0 violated");
        if (!(s.epsilon > 0.0)) throw Error(ErrorKind::Config, "barrier: epsilon > 0 violated");
    }
}

double height_at(const BarrierSchedule& s, double t) {
    if (s.mode == RampMode::Static || t <= s.t_p) return s.height0;
    if (t >= s.t_p + s.epsilon) return 0.0;
    return s.height0 * (1.0 - (t - s.t_p) / s.epsilon);
}

bool inside_barrier(const BarrierSchedule& s, double x) {
    return std::abs(x - s.center) <= 0.5 * s.width * (1.0 + kEdgeSlack);
}

std::vector<double> potential_on_grid(const BarrierSchedule& s, const Grid& grid, double t) {
    const double h = height_at(s, t);
    std::vector<double> v(grid.n_points, 0.0);
    for (std::size_t j = 0; j < grid.n_points; ++j) {
        if (inside_barrier(s, grid.x(j))) v[j] = h;
    }
    return v;
}

std::size_t barrier_node_count(const BarrierSchedule& s, const Grid& grid) {
    std::size_t count = 0;
    for (std::size_t j = 0; j < grid.n_points; ++j) {
        if (inside_barrier(s, grid.x(j))) ++count;
    }
    return count;
}

std::string barrier_resolution_warning(const BarrierSchedule& s, const Grid& grid) {
    if (s.width < 3.0 * grid.dx) {
        return "barrier under-resolved: width < 3 dx";
    }
    return {};
}

std::string to_string(RampMode mode) {
    return mode == RampMode::Static ? "static" : "linear_ramp";
}

}  // namespace superarrival
