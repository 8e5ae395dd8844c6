#pragma once

#include <cstdint>
#include <vector>

#include "superarrival/barrier.hpp"
#include "superarrival/config.hpp"
#include "superarrival/packet.hpp"
#include "superarrival/series.hpp"

namespace superarrival {

struct Particle {
    double x = 0.0;
    double p = 0.0;
};

/// Phase-space sample standing in for the Liouville density; each particle
/// follows one characteristic.
struct ClassicalEnsemble {
    std::vector<Particle> particles;
    double t = 0.0;
    std::uint64_t seed = 0;

    std::size_t size() const { return particles.size(); }
};

/// Independent x ~ N(x0, sigma0^2), p ~ N(p0, sigma_p^2). sigma_p <= 0
/// selects the minimum-uncertainty value 1/(2 sigma0).
ClassicalEnsemble sample_ensemble(const PacketSpec& packet, std::size_t n, std::uint64_t seed,
                                  double sigma_p = 0.0);

/// The rectangular barrier with its discontinuous edges replaced by linear
/// ramps of half-width w: V rises from 0 at edge - w to full height at
/// edge + w on the left (mirrored on the right). Force is piecewise constant.
class SmoothedBarrier {
public:
    SmoothedBarrier(const BarrierSchedule& schedule, double edge_half_width);

    /// V_s(x) for a barrier of the given top height.
    double potential(double x, double height) const;
    /// -dV_s/dx, with the ramp interior taken as the half-open [a, b).
    double force(double x, double height) const;

    /// Exact flow of H = p^2 + V_s(x) at frozen height over duration tau.
    /// Motion is parabolic inside each constant-force region; the particle
    /// is carried across region boundaries analytically.
    void advance(Particle& particle, double height, double tau) const;

    double edge_half_width() const { return w_; }

private:
    // Region boundaries in increasing x: b_[0] < b_[1] <= b_[2] < b_[3].
    double b_[4];
    double w_;

    int region_of(double x, double p) const;
    double region_force(int region, double height) const;
};

/// One step of duration dt with the barrier height frozen at t + dt/2.
void step_classical(ClassicalEnsemble& ensemble, const BarrierSchedule& schedule,
                    const SmoothedBarrier& barrier, double dt);

double particle_energy(const Particle& particle, const SmoothedBarrier& barrier, double height);

struct ClassicalRun {
    ReflectionSeries series;
    ClassicalEnsemble final_state;
};

/// R_cl(t) = (particles with x < detector_x) / n on the same sample clock
/// as evolve(). The ensemble is drawn from config.rng_seed, so a static and
/// a perturbed run of the same config share random numbers.
ClassicalRun classical_reflection_series(const ExperimentConfig& config, std::size_t n);

}  // namespace superarrival
