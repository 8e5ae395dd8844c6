#pragma once

#include <string>
#include <vector>

#include "superarrival/grid.hpp"

namespace superarrival {

enum class RampMode { Static, LinearRamp };

/// Rectangular barrier and its height law in time. Static keeps height0
/// forever; LinearRamp drops it linearly to zero over [t_p, t_p + epsilon].
struct BarrierSchedule {
    double center = 0.0;
    double width = 0.016;
    double height0 = 0.0;
    RampMode mode = RampMode::Static;
    double t_p = 0.0;
    double epsilon = 0.0;

    double left_edge() const { return center - 0.5 * width; }
    double right_edge() const { return center + 0.5 * width; }

    BarrierSchedule as_static() const {
        BarrierSchedule s = *this;
        s.mode = RampMode::Static;
        return s;
    }
};

/// Throws Error(Config) if the schedule's invariants do not hold.
void validate(const BarrierSchedule& schedule);

double height_at(const BarrierSchedule& schedule, double t);

/// True if grid point x lies on the closed barrier interval.
bool inside_barrier(const BarrierSchedule& schedule, double x);

/// V(x_j, t) on every grid node.
std::vector<double> potential_on_grid(const BarrierSchedule& schedule, const Grid& grid, double t);

/// Number of grid nodes covered by the barrier.
std::size_t barrier_node_count(const BarrierSchedule& schedule, const Grid& grid);

/// Empty unless the barrier spans fewer than three cells.
std::string barrier_resolution_warning(const BarrierSchedule& schedule, const Grid& grid);

std::string to_string(RampMode mode);

}  // namespace superarrival
