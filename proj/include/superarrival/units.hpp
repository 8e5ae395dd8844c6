#pragma once

namespace superarrival {

// Natural units of the model: i dpsi/dt = -d2psi/dx2 + V psi.
struct UnitSystem {
    static constexpr double hbar = 1.0;
    static constexpr double mass = 0.5;
};

inline constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace superarrival
