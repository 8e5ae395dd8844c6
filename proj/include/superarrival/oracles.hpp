#pragma once

#include <utility>
#include <vector>

#include "superarrival/packet.hpp"

namespace superarrival::oracles {

/// |phi(p)|^2 of the initial packet sampled on a uniform momentum grid.
struct MomentumSpectrum {
    std::vector<double> p_values;
    std::vector<double> weights;
};

/// Gaussian spectrum over p0 +/- half_range_sigmas * sigma_p.
MomentumSpectrum momentum_spectrum(const PacketSpec& packet, std::size_t n_samples,
                                   double half_range_sigmas = 6.0);

/// Plane-wave |R(p)|^2 for a rectangular barrier with hbar = 1, m = 1/2
/// (kinetic energy p^2).
double plane_wave_reflection(double p, double height, double width);

/// |T(p)|^2, computed independently of plane_wave_reflection.
double plane_wave_transmission(double p, double height, double width);

/// Integral of |phi(p)|^2 |R(p)|^2 dp over p0 +/- 6 sigma_p by adaptive
/// Simpson to 1e-9 absolute.
double asymptotic_reflection_integral(const PacketSpec& packet, double height, double width);

/// Closed-form free Gaussian: (<x>(t), sigma(t)).
std::pair<double, double> free_gaussian_moments(const PacketSpec& packet, double t);

}  // namespace superarrival::oracles
