#include "superarrival/packet.hpp"

namespace superarrival {

DerivedQuantities derived_quantities(const PacketSpec& packet) noexcept {
    DerivedQuantities d;
    d.energy = packet.p0 * packet.p0 + 0.25 / (packet.sigma0 * packet.sigma0);
    d.group_velocity = 2.0 * packet.p0;
    return d;
}

}  // namespace superarrival
