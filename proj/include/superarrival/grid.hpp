#pragma once

#include <cstddef>

namespace superarrival {

/// Uniform spatial grid plus the time step shared by every solver.
struct Grid {
    double x_min = 0.0;
    double x_max = 0.0;
    std::size_t n_points = 0;
    double dx = 0.0;
    double dt = 0.0;

    double x(std::size_t j) const { return x_min + static_cast<double>(j) * dx; }
};

/// Throws Error(Config) for a degenerate grid. Resolution against a
/// particular packet is checked by check_resolution().
Grid build_grid(double x_min, double x_max, std::size_t n_points, double dt);

/// Throws Error(Resolution) unless dx <= lambda/40 with lambda = 2 pi / p0.
void check_resolution(const Grid& grid, double p0);

}  // namespace superarrival
