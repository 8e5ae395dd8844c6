#include "superarrival/grid.hpp"

#include <cmath>
#include <sstream>

#include "superarrival/errors.hpp"
#include "superarrival/units.hpp"

namespace superarrival {

Grid build_grid(double x_min, double x_max, std::size_t n_points, double dt) {
    if (!(x_min < x_max)) {
        throw Error(ErrorKind::Config, "grid: x_min < x_max violated");
    }
    if (n_points < 2) {
        throw Error(ErrorKind::Config, "grid: n_points >= 2 violated");
    }
    if (!(dt > 0.0)) {
        throw Error(ErrorKind::Config, "grid: dt > 0 violated");
    }
    Grid grid;
    grid.x_min = x_min;
    grid.x_max = x_max;
    grid.n_points = n_points;
    grid.dx = (x_max - x_min) / static_cast<double>(n_points - 1);
    grid.dt = dt;
    return grid;
}

void check_resolution(const Grid& grid, double p0) {
    const double lambda = 2.0 * kPi / p0;
    if (grid.dx > lambda / 40.0) {
        std::ostringstream msg;
        msg << "grid: dx <= lambda/40 violated (dx=" << grid.dx << ", lambda/40=" << lambda / 40.0
            << ")";
        throw Error(ErrorKind::Resolution, msg.str());
    }
}

}  // namespace superarrival
