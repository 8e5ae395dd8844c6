#include "superarrival/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "superarrival/units.hpp"

namespace superarrival::oracles {

namespace {

double gaussian_weight(double p, double p0, double sigma_p) {
    const double u = (p - p0) / sigma_p;
    return std::exp(-0.5 * u * u) / (std::sqrt(2.0 * kPi) * sigma_p);
}

// sin(z)/z with the removable singularity handled.
template <typename T>
T sinc(T z) {
    if (std::abs(z) < 1e-4) {
        const T z2 = z * z;
        return T(1.0) - z2 / T(6.0) + z2 * z2 / T(120.0);
    }
    return std::sin(z) / z;
}

template <typename F>
double simpson_step(F& f, double a, double b, double fa, double fm, double fb, double whole, double tol,
                    int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double diff = left + right - whole;
    if (depth <= 0 || std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double adaptive_simpson(F f, double a, double b, double tol) {
    // Split first so narrow features cannot hide between the initial nodes.
    constexpr int kPanels = 64;
    const double h = (b - a) / kPanels;
    double total = 0.0;
    for (int i = 0; i < kPanels; ++i) {
        const double lo = a + i * h;
        const double hi = lo + h;
        const double flo = f(lo);
        const double fmid = f(0.5 * (lo + hi));
        const double fhi = f(hi);
        const double whole = h / 6.0 * (flo + 4.0 * fmid + fhi);
        total += simpson_step(f, lo, hi, flo, fmid, fhi, whole, tol / kPanels, 40);
    }
    return total;
}

}  // namespace

MomentumSpectrum momentum_spectrum(const PacketSpec& packet, std::size_t n_samples, double half_range_sigmas) {
    const double sigma_p = momentum_spread(packet);
    const double lo = packet.p0 - half_range_sigmas * sigma_p;
    const double hi = packet.p0 + half_range_sigmas * sigma_p;
    MomentumSpectrum spectrum;
    spectrum.p_values.resize(n_samples);
    spectrum.weights.resize(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double p = n_samples > 1 ? lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n_samples - 1)
                                       : packet.p0;
        spectrum.p_values[i] = p;
        spectrum.weights[i] = gaussian_weight(p, packet.p0, sigma_p);
    }
    return spectrum;
}

double plane_wave_reflection(double p, double height, double width) {
    if (height <= 0.0) return 0.0;
    const double energy = p * p;
    const double diff = energy - height;
    // sinh^2(kappa a)/(V - E) for E < V, sin^2(q a)/(E - V) for E > V; both
    // equal a^2 (sinc)^2 and tend to a^2 at E = V.
    double f = 0.0;
    if (diff < 0.0) {
        const double ka = std::sqrt(-diff) * width;
        const double s = ka < 1e-4 ? 1.0 + ka * ka / 6.0 : std::sinh(ka) / ka;
        f = width * width * s * s;
    } else {
        const double s = sinc(std::sqrt(diff) * width);
        f = width * width * s * s;
    }
    // Written as 1/(1 + x) so an overflowing sinh gives exactly 1.
    return 1.0 / (1.0 + 4.0 * energy / (height * height * f));
}

double plane_wave_transmission(double p, double height, double width) {
    // Transfer matrix across [0, a]: 1/t = e^{ika} [cos(qa) - i (k^2 + q^2)/(2k) sin(qa)/q]
    using C = std::complex<double>;
    const double k = p;
    const C q = std::sqrt(C(p * p - height, 0.0));
    const C qa = q * width;
    const C sin_over_q = width * sinc(qa);
    const C inv_t = std::cos(qa) - C(0.0, 1.0) * (k * k + q * q) / (2.0 * k) * sin_over_q;
    return 1.0 / std::norm(inv_t);
}

double asymptotic_reflection_integral(const PacketSpec& packet, double height, double width) {
    const double sigma_p = momentum_spread(packet);
    const double lo = std::max(packet.p0 - 6.0 * sigma_p, 1e-12);
    const double hi = packet.p0 + 6.0 * sigma_p;
    auto integrand = [&](double p) {
        return gaussian_weight(p, packet.p0, sigma_p) * plane_wave_reflection(p, height, width);
    };
    return adaptive_simpson(integrand, lo, hi, 1e-9);
}

std::pair<double, double> free_gaussian_moments(const PacketSpec& packet, double t) {
    const double mass = UnitSystem::mass;
    const double s2 = packet.sigma0 * packet.sigma0;
    const double mean = packet.x0 + packet.p0 / mass * t;
    const double tau = UnitSystem::hbar * t / (2.0 * mass * s2);
    return {mean, packet.sigma0 * std::sqrt(1.0 + tau * tau)};
}

}  // namespace superarrival::oracles
