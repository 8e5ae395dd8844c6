#include <doctest.h>

#include <cmath>
#include <random>

#include "superarrival/oracles.hpp"
#include "superarrival/units.hpp"

using namespace superarrival;
using namespace superarrival::oracles;

TEST_CASE("no barrier reflects nothing") {
    CHECK(plane_wave_reflection(100.0, 0.0, 0.016) == 0.0);
    CHECK(plane_wave_transmission(100.0, 0.0, 0.016) == doctest::Approx(1.0));
}

TEST_CASE("thick barrier reflects everything below the top") {
    CHECK(plane_wave_reflection(100.0, 2e4, 10.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("E = V limit") {
    // At E = V the coefficient is (1 + 4 / (V a^2))^-1 (derived limit of
    // sinh^2(kappa a) / kappa^2 -> a^2); approached from both sides.
    const double width = 0.016;
    const double height = 24874.0;
    const double p = std::sqrt(height);
    const double limit = 1.0 / (1.0 + 4.0 / (height * width * width));
    CHECK(plane_wave_reflection(p, height, width) == doctest::Approx(limit).epsilon(1e-12));
    for (double rel : {1e-3, 1e-5, 1e-7}) {
        CHECK(plane_wave_reflection(p * (1.0 - rel), height, width) == doctest::Approx(limit).epsilon(20 * rel));
        CHECK(plane_wave_reflection(p * (1.0 + rel), height, width) == doctest::Approx(limit).epsilon(20 * rel));
    }
    const double below = plane_wave_reflection(p * (1.0 - 1e-10), height, width);
    const double above = plane_wave_reflection(p * (1.0 + 1e-10), height, width);
    CHECK(std::abs(below - above) < 1e-8);
}

TEST_CASE("textbook value for the default barrier") {
    // E/V = 1/2 gives |R|^2 = tanh^2(kappa a) with kappa = sqrt(V - E) = sqrt(E).
    const double p = 50.0 * kPi;
    const double height = 2.0 * p * p;
    const double t = std::tanh(p * 0.016);
    CHECK(plane_wave_reflection(p, height, 0.016) == doctest::Approx(t * t).epsilon(1e-12));
}

TEST_CASE("property: |R|^2 + |T|^2 = 1") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 2000; ++trial) {
        const double p = 1.0 + 300.0 * u(rng);
        const double height = 1e5 * u(rng);
        const double width = 1e-4 + 0.05 * u(rng);
        const double r = plane_wave_reflection(p, height, width);
        const double t = plane_wave_transmission(p, height, width);
        CHECK(r + t == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(r >= 0.0);
        CHECK(r <= 1.0);
    }
}

TEST_CASE("momentum spectrum is normalised over +-6 sigma") {
    const PacketSpec packet{};
    const MomentumSpectrum s = momentum_spectrum(packet, 4001);
    double total = 0.0;
    for (std::size_t i = 1; i < s.p_values.size(); ++i) {
        total += 0.5 * (s.weights[i] + s.weights[i - 1]) * (s.p_values[i] - s.p_values[i - 1]);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("asymptotic reflection integral") {
    const PacketSpec packet{};
    const double e = packet.p0 * packet.p0 + 0.25 / (packet.sigma0 * packet.sigma0);
    const double r0 = asymptotic_reflection_integral(packet, 2.0 * e, 0.016);
    CHECK(r0 > 0.95);
    CHECK(r0 < 1.0);
    CHECK(asymptotic_reflection_integral(packet, 0.0, 0.016) == 0.0);

    // Cross-check against a plain trapezoid over the sampled spectrum.
    const MomentumSpectrum s = momentum_spectrum(packet, 20001);
    double trap = 0.0;
    for (std::size_t i = 1; i < s.p_values.size(); ++i) {
        const double a = s.weights[i - 1] * plane_wave_reflection(s.p_values[i - 1], 2.0 * e, 0.016);
        const double b = s.weights[i] * plane_wave_reflection(s.p_values[i], 2.0 * e, 0.016);
        trap += 0.5 * (a + b) * (s.p_values[i] - s.p_values[i - 1]);
    }
    CHECK(r0 == doctest::Approx(trap).epsilon(1e-6));
}

TEST_CASE("monochromatic limit") {
    PacketSpec packet{};
    packet.sigma0 = 1e4;
    const double height = 3e4;
    CHECK(asymptotic_reflection_integral(packet, height, 0.01) ==
          doctest::Approx(plane_wave_reflection(packet.p0, height, 0.01)).epsilon(1e-6));
}

TEST_CASE("free Gaussian moments") {
    const PacketSpec packet{};
    const auto [m0, s0] = free_gaussian_moments(packet, 0.0);
    CHECK(m0 == packet.x0);
    CHECK(s0 == packet.sigma0);
    const auto [m1, s1] = free_gaussian_moments(packet, 8e-4);
    CHECK(m1 == doctest::Approx(-0.3 + 100.0 * kPi * 8e-4));
    CHECK(m1 == doctest::Approx(-0.0487).epsilon(1e-3));
    const double t2 = std::sqrt(3.0) * packet.sigma0 * packet.sigma0;
    CHECK(free_gaussian_moments(packet, t2).second == doctest::Approx(2.0 * packet.sigma0));
}
