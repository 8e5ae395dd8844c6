#include "superarrival/classical.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "superarrival/errors.hpp"

namespace superarrival {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Smallest s > 0 with force s^2 + 2 p s + offset = 0, or +inf.
double first_hit(double force, double p, double offset) {
    if (force == 0.0) {
        if (p == 0.0) return kInf;
        const double s = -offset / (2.0 * p);
        return s > 0.0 ? s : kInf;
    }
    const double b = 2.0 * p;
    const double disc = b * b - 4.0 * force * offset;
    if (disc < 0.0) return kInf;
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    double best = kInf;
    const double r1 = q / force;
    if (r1 > 0.0) best = r1;
    if (q != 0.0) {
        const double r2 = offset / q;
        if (r2 > 0.0 && r2 < best) best = r2;
    }
    return best;
}

}  // namespace

ClassicalEnsemble sample_ensemble(const PacketSpec& packet, std::size_t n, std::uint64_t seed, double sigma_p) {
    if (n < 1) throw Error(ErrorKind::Domain, "sample_ensemble: n >= 1 violated");
    const double sp = sigma_p > 0.0 ? sigma_p : momentum_spread(packet);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> unit(0.0, 1.0);
    ClassicalEnsemble ens;
    ens.seed = seed;
    ens.particles.resize(n);
    for (auto& particle : ens.particles) {
        particle.x = packet.x0 + packet.sigma0 * unit(rng);
        particle.p = packet.p0 + sp * unit(rng);
    }
    return ens;
}

SmoothedBarrier::SmoothedBarrier(const BarrierSchedule& schedule, double edge_half_width)
    : b_{schedule.left_edge() - edge_half_width, schedule.left_edge() + edge_half_width,
         schedule.right_edge() - edge_half_width, schedule.right_edge() + edge_half_width},
      w_(edge_half_width) {
    if (!(edge_half_width > 0.0) || !(b_[1] <= b_[2])) {
        throw Error(ErrorKind::Config, "smoothed barrier: 0 < w_s <= width/2 violated");
    }
}

double SmoothedBarrier::potential(double x, double height) const {
    if (x < b_[0] || x >= b_[3]) return 0.0;
    if (x < b_[1]) return height * (x - b_[0]) / (2.0 * w_);
    if (x < b_[2]) return height;
    return height * (b_[3] - x) / (2.0 * w_);
}

double SmoothedBarrier::force(double x, double height) const {
    return region_force(region_of(x, 0.0), height);
}

int SmoothedBarrier::region_of(double x, double p) const {
    int region = 0;
    for (double b : b_) {
        if (x > b || (x == b && p >= 0.0)) ++region;
    }
    return region;
}

double SmoothedBarrier::region_force(int region, double height) const {
    if (region == 1) return -height / (2.0 * w_);
    if (region == 3) return height / (2.0 * w_);
    return 0.0;
}

void SmoothedBarrier::advance(Particle& particle, double height, double tau) const {
    double remaining = tau;
    for (int crossings = 0; crossings < 64; ++crossings) {
        const int region = region_of(particle.x, particle.p);
        const double force = region_force(region, height);
        // dp/dt = F, dx/dt = 2p  =>  x(s) = x + 2 p s + F s^2
        const double lo = region > 0 ? b_[region - 1] : -kInf;
        const double hi = region < 4 ? b_[region] : kInf;
        double s_hit = kInf;
        double target = 0.0;
        if (hi < kInf) {
            const double s = first_hit(force, particle.p, particle.x - hi);
            if (s < s_hit) {
                s_hit = s;
                target = hi;
            }
        }
        if (lo > -kInf) {
            const double s = first_hit(force, particle.p, particle.x - lo);
            if (s < s_hit) {
                s_hit = s;
                target = lo;
            }
        }
        if (s_hit >= remaining) {
            particle.x += (2.0 * particle.p + force * remaining) * remaining;
            particle.p += force * remaining;
            return;
        }
        particle.x = target;
        particle.p += force * s_hit;
        remaining -= s_hit;
    }
    // Only reachable for a particle resting exactly on a region boundary.
    particle.x += 2.0 * particle.p * remaining;
}

void step_classical(ClassicalEnsemble& ensemble, const BarrierSchedule& schedule, const SmoothedBarrier& barrier,
                    double dt) {
    const double height = height_at(schedule, ensemble.t + 0.5 * dt);
    for (auto& particle : ensemble.particles) barrier.advance(particle, height, dt);
    ensemble.t += dt;
}

double particle_energy(const Particle& particle, const SmoothedBarrier& barrier, double height) {
    return particle.p * particle.p + barrier.potential(particle.x, height);
}

ClassicalRun classical_reflection_series(const ExperimentConfig& config, std::size_t n) {
    ClassicalRun run;
    run.final_state = sample_ensemble(config.packet, n, config.rng_seed, config.classical.sigma_p);
    const SmoothedBarrier barrier(config.barrier, config.classical.edge_half_width);
    auto& series = run.series;
    series.kind = SeriesKind::Classical;
    series.perturbed = config.barrier.mode == RampMode::LinearRamp;
    series.epsilon = series.perturbed ? config.barrier.epsilon : 0.0;

    auto& ens = run.final_state;
    const std::size_t n_steps = config.n_steps();
    const double dt = config.grid.dt;
    for (std::size_t k = 0;; ++k) {
        if (k % config.sample_stride == 0) {
            std::size_t left = 0;
            for (const auto& particle : ens.particles) left += particle.x < config.detector_x ? 1 : 0;
            series.times.push_back(static_cast<double>(k) * dt);
            series.values.push_back(static_cast<double>(left) / static_cast<double>(n));
        }
        if (k == n_steps) break;
        step_classical(ens, config.barrier, barrier, dt);
        ens.t = static_cast<double>(k + 1) * dt;
    }
    return run;
}

}  // namespace superarrival
