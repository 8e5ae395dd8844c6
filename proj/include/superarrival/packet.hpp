#pragma once

namespace superarrival {

/// Initial Gaussian wave packet: centre, width and carrier momentum.
struct PacketSpec {
    double x0 = -0.3;
    double sigma0 = 0.05 / 1.4142135623730950488;
    double p0 = 50.0 * 3.141592653589793238462643383279502884;
};

struct DerivedQuantities {
    double energy = 0.0;          // <H> = p0^2 + 1/(4 sigma0^2)
    double group_velocity = 0.0;  // 2 p0
};

DerivedQuantities derived_quantities(const PacketSpec& packet) noexcept;

/// Momentum-space standard deviation of a minimum-uncertainty packet.
inline double momentum_spread(const PacketSpec& packet) noexcept {
    return 1.0 / (2.0 * packet.sigma0);
}

}  // namespace superarrival
