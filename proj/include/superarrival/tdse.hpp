#pragma once

#include <complex>
#include <string>
#include <vector>

#include "superarrival/barrier.hpp"
#include "superarrival/config.hpp"
#include "superarrival/grid.hpp"
#include "superarrival/packet.hpp"
#include "superarrival/series.hpp"
#include "superarrival/tridiagonal.hpp"

namespace superarrival {

using Complex = std::complex<double>;

/// psi on the grid at time t. The end nodes are hard walls and stay zero.
struct WaveFunction {
    Grid grid;
    std::vector<Complex> amplitudes;
    double t = 0.0;

    /// sum |psi_j|^2 dx
    double norm() const;
    std::vector<double> density() const;
};

WaveFunction init_gaussian(const PacketSpec& packet, const Grid& grid);

/// Like init_gaussian, but throws Error(Overlap) if more than 1e-10 of the
/// norm sits on the barrier support.
WaveFunction init_gaussian(const PacketSpec& packet, const Grid& grid,
                           const BarrierSchedule& barrier);

double mean_position(const WaveFunction& psi);
double position_variance(const WaveFunction& psi);
/// <p> = -i sum psi* dpsi/dx dx with a central difference.
double mean_momentum(const WaveFunction& psi);
/// Fraction of the norm inside |x - center| <= width/2.
double norm_on_support(const WaveFunction& psi, const BarrierSchedule& barrier);
/// sum over nodes with |x| <= limit of |psi|^2 dx.
double norm_within(const WaveFunction& psi, double limit);

/// Integral of |psi|^2 from the left wall to x_detector: trapezoid rule,
/// with the cell containing x_detector cut at x_detector.
double probability_left_of(const WaveFunction& psi, double x_detector);
double probability_left_of(const Grid& grid, const std::vector<double>& density, double x_detector);

/// <phi|psi> * dx
Complex overlap(const WaveFunction& phi, const WaveFunction& psi);

/// Crank-Nicolson propagator for H = -d2/dx2 + V(x, t) with V sampled at
/// the midpoint t + dt/2 of each step.
class CrankNicolson {
public:
    CrankNicolson(const Grid& grid, BarrierSchedule schedule);

    /// Advances psi by grid.dt in place.
    void step(WaveFunction& psi);

    const BarrierSchedule& schedule() const { return schedule_; }

private:
    Grid grid_;
    BarrierSchedule schedule_;
    std::vector<char> on_barrier_;
    std::vector<Complex> lower_, diag_, upper_, rhs_, out_;
    TridiagonalSolver solver_;
};

/// Single step convenience wrapper; dt must equal psi.grid.dt.
WaveFunction step(WaveFunction psi, const BarrierSchedule& schedule, double dt);

struct Snapshot {
    double t = 0.0;
    std::vector<double> x;
    std::vector<double> density;
};

struct EvolveResult {
    ReflectionSeries series;
    std::vector<Snapshot> snapshots;
    WaveFunction final_state;
    double max_norm_drift = 0.0;
    std::vector<std::string> warnings;
};

/// Runs config.barrier from t = 0 to t_end, sampling the detector integral
/// every sample_stride steps (t = 0 included) and capturing |psi|^2 at the
/// nearest step to each requested snapshot time.
EvolveResult evolve(const ExperimentConfig& config, const std::vector<double>& snapshot_times = {});

}  // namespace superarrival
