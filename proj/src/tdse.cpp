#include "superarrival/tdse.hpp"

#include <algorithm>
#include <cmath>

#include "superarrival/errors.hpp"

namespace superarrival {

double WaveFunction::norm() const {
    double sum = 0.0;
    for (const auto& a : amplitudes) sum += std::norm(a);
    return sum * grid.dx;
}

std::vector<double> WaveFunction::density() const {
    std::vector<double> rho(amplitudes.size());
    std::transform(amplitudes.begin(), amplitudes.end(), rho.begin(),
                   [](const Complex& a) { return std::norm(a); });
    return rho;
}

WaveFunction init_gaussian(const PacketSpec& packet, const Grid& grid) {
    WaveFunction psi;
    psi.grid = grid;
    psi.amplitudes.assign(grid.n_points, Complex{});
    const double inv4s2 = 1.0 / (4.0 * packet.sigma0 * packet.sigma0);
    for (std::size_t j = 1; j + 1 < grid.n_points; ++j) {
        const double x = grid.x(j);
        const double u = x - packet.x0;
        psi.amplitudes[j] = std::exp(-u * u * inv4s2) * std::polar(1.0, packet.p0 * x);
    }
    const double scale = 1.0 / std::sqrt(psi.norm());
    for (auto& a : psi.amplitudes) a *= scale;
    return psi;
}

WaveFunction init_gaussian(const PacketSpec& packet, const Grid& grid, const BarrierSchedule& barrier) {
    WaveFunction psi = init_gaussian(packet, grid);
    const double inside = norm_on_support(psi, barrier);
    if (inside > 1e-10) {
        throw Error(ErrorKind::Overlap,
                    "initial packet overlaps the barrier: " + format_number(inside) + " of the norm > 1e-10");
    }
    return psi;
}

double mean_position(const WaveFunction& psi) {
    double sum = 0.0;
    for (std::size_t j = 0; j < psi.amplitudes.size(); ++j) sum += psi.grid.x(j) * std::norm(psi.amplitudes[j]);
    return sum * psi.grid.dx / psi.norm();
}

double position_variance(const WaveFunction& psi) {
    const double mean = mean_position(psi);
    double sum = 0.0;
    for (std::size_t j = 0; j < psi.amplitudes.size(); ++j) {
        const double u = psi.grid.x(j) - mean;
        sum += u * u * std::norm(psi.amplitudes[j]);
    }
    return sum * psi.grid.dx / psi.norm();
}

double mean_momentum(const WaveFunction& psi) {
    const auto& a = psi.amplitudes;
    Complex sum{};
    for (std::size_t j = 1; j + 1 < a.size(); ++j) {
        sum += std::conj(a[j]) * (a[j + 1] - a[j - 1]);
    }
    // -i * sum / (2 dx) * dx
    return (Complex(0.0, -1.0) * sum * 0.5).real() / psi.norm();
}

double norm_on_support(const WaveFunction& psi, const BarrierSchedule& barrier) {
    double sum = 0.0;
    for (std::size_t j = 0; j < psi.amplitudes.size(); ++j) {
        if (inside_barrier(barrier, psi.grid.x(j))) sum += std::norm(psi.amplitudes[j]);
    }
    return sum * psi.grid.dx;
}

double norm_within(const WaveFunction& psi, double limit) {
    double sum = 0.0;
    for (std::size_t j = 0; j < psi.amplitudes.size(); ++j) {
        if (std::abs(psi.grid.x(j)) <= limit) sum += std::norm(psi.amplitudes[j]);
    }
    return sum * psi.grid.dx;
}

double probability_left_of(const Grid& grid, const std::vector<double>& rho, double x_detector) {
    if (x_detector <= grid.x_min) return 0.0;
    const std::size_t last = grid.n_points - 1;
    const double s = (x_detector - grid.x_min) / grid.dx;
    std::size_t cell = static_cast<std::size_t>(std::floor(s));
    if (cell >= last) cell = last - 1;
    const double frac = std::min(1.0, s - static_cast<double>(cell));

    double sum = 0.0;
    for (std::size_t j = 0; j < cell; ++j) sum += 0.5 * (rho[j] + rho[j + 1]);
    const double at_detector = rho[cell] + frac * (rho[cell + 1] - rho[cell]);
    sum += 0.5 * frac * (rho[cell] + at_detector);
    return sum * grid.dx;
}

double probability_left_of(const WaveFunction& psi, double x_detector) {
    return probability_left_of(psi.grid, psi.density(), x_detector);
}

Complex overlap(const WaveFunction& phi, const WaveFunction& psi) {
    Complex sum{};
    for (std::size_t j = 0; j < phi.amplitudes.size(); ++j) sum += std::conj(phi.amplitudes[j]) * psi.amplitudes[j];
    return sum * phi.grid.dx;
}

CrankNicolson::CrankNicolson(const Grid& grid, BarrierSchedule schedule)
    : grid_(grid), schedule_(schedule), on_barrier_(grid.n_points, 0) {
    for (std::size_t j = 0; j < grid.n_points; ++j) on_barrier_[j] = inside_barrier(schedule_, grid.x(j)) ? 1 : 0;
    const std::size_t m = grid.n_points >= 2 ? grid.n_points - 2 : 0;
    const Complex off(0.0, -grid.dt / (2.0 * grid.dx * grid.dx));
    lower_.assign(m, off);
    upper_.assign(m, off);
    diag_.resize(m);
    rhs_.resize(m);
    out_.resize(m);
}

void CrankNicolson::step(WaveFunction& psi) {
    const std::size_t n = grid_.n_points;
    if (n < 3) {
        psi.t += grid_.dt;
        return;
    }
    const double half_dt = 0.5 * grid_.dt;
    const double kinetic = 2.0 / (grid_.dx * grid_.dx);
    const double hop = half_dt / (grid_.dx * grid_.dx);
    const double v = height_at(schedule_, psi.t + half_dt);
    auto& a = psi.amplitudes;

    for (std::size_t i = 0; i < diag_.size(); ++i) {
        const std::size_t j = i + 1;
        const double h_jj = kinetic + (on_barrier_[j] ? v : 0.0);
        diag_[i] = Complex(1.0, half_dt * h_jj);
        // (1 - i dt/2 H) psi with H_{j,j+-1} = -1/dx^2
        rhs_[i] = Complex(1.0, -half_dt * h_jj) * a[j] + Complex(0.0, hop) * (a[j - 1] + a[j + 1]);
    }
    solver_.solve(lower_, diag_, upper_, rhs_, out_);
    std::copy(out_.begin(), out_.end(), a.begin() + 1);
    a.front() = Complex{};
    a.back() = Complex{};
    psi.t += grid_.dt;
}

WaveFunction step(WaveFunction psi, const BarrierSchedule& schedule, double dt) {
    if (std::abs(dt - psi.grid.dt) > 1e-12 * psi.grid.dt) {
        throw Error(ErrorKind::Domain, "step: dt must equal grid.dt");
    }
    CrankNicolson propagator(psi.grid, schedule);
    propagator.step(psi);
    return psi;
}

EvolveResult evolve(const ExperimentConfig& config, const std::vector<double>& snapshot_times) {
    const Grid& grid = config.grid;
    const std::size_t n_steps = config.n_steps();

    std::vector<std::pair<std::size_t, std::size_t>> snapshot_steps;  // (step, request index)
    for (std::size_t i = 0; i < snapshot_times.size(); ++i) {
        const double t = snapshot_times[i];
        if (!(t > 0.0) || t > config.t_end * (1.0 + 1e-12)) {
            throw Error(ErrorKind::Domain, "snapshot time " + format_number(t) + " outside (0, t_end]");
        }
        snapshot_steps.emplace_back(static_cast<std::size_t>(std::llround(t / grid.dt)), i);
    }
    std::sort(snapshot_steps.begin(), snapshot_steps.end());

    EvolveResult result;
    result.series.kind = SeriesKind::Quantum;
    result.series.perturbed = config.barrier.mode == RampMode::LinearRamp;
    result.series.epsilon = result.series.perturbed ? config.barrier.epsilon : 0.0;
    result.snapshots.resize(snapshot_times.size());

    WaveFunction psi = init_gaussian(config.packet, grid, config.barrier);
    const double norm0 = psi.norm();
    CrankNicolson propagator(grid, config.barrier);
    std::vector<double> xs(grid.n_points);
    for (std::size_t j = 0; j < grid.n_points; ++j) xs[j] = grid.x(j);

    const double window = 0.9 * std::max(std::abs(grid.x_min), std::abs(grid.x_max));
    bool contamination_warned = false;
    std::size_t next_snapshot = 0;

    for (std::size_t k = 0;; ++k) {
        if (k % config.sample_stride == 0) {
            const auto rho = psi.density();
            result.series.times.push_back(static_cast<double>(k) * grid.dt);
            result.series.values.push_back(probability_left_of(grid, rho, config.detector_x));
            result.max_norm_drift = std::max(result.max_norm_drift, std::abs(psi.norm() - norm0));
            if (!contamination_warned && norm_within(psi, window) < 0.999) {
                result.warnings.push_back("boundary contamination: norm within |x| <= 0.9 x_max below 0.999 at t=" +
                                          format_number(psi.t));
                contamination_warned = true;
            }
        }
        while (next_snapshot < snapshot_steps.size() && snapshot_steps[next_snapshot].first == k) {
            auto& snap = result.snapshots[snapshot_steps[next_snapshot].second];
            snap.t = static_cast<double>(k) * grid.dt;
            snap.x = xs;
            snap.density = psi.density();
            ++next_snapshot;
        }
        if (k == n_steps) break;
        propagator.step(psi);
        // Re-anchor the clock to avoid accumulating roundoff in t.
        psi.t = static_cast<double>(k + 1) * grid.dt;
    }
    result.max_norm_drift = std::max(result.max_norm_drift, std::abs(psi.norm() - norm0));
    result.final_state = std::move(psi);
    return result;
}

}  // namespace superarrival
