// Acceptance suite: one PASS/FAIL line per criterion. Pass criterion numbers
// as arguments to run a subset; no arguments runs all of them.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "superarrival/classical.hpp"
#include "superarrival/csv.hpp"
#include "superarrival/errors.hpp"
#include "superarrival/observables.hpp"
#include "superarrival/oracles.hpp"
#include "superarrival/sweep.hpp"
#include "superarrival/tdse.hpp"

using namespace superarrival;

namespace {

const std::vector<double> kEpsilons{2e-5, 1e-4, 2e-4, 4e-4};
const std::vector<double> kDetectors{-0.6, -0.5, -0.4};
const std::vector<double> kWidths{0.004, 0.008, 0.016};

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        pass = pass && ok;
        if (!detail.empty()) detail += "; ";
        detail += (ok ? "" : "FAILED ") + what;
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5g", v);
    return buf;
}

std::size_t workers() { return std::max(1u, std::thread::hardware_concurrency()); }

ExperimentConfig static_config(double width = 0.016, double detector = -0.4) {
    ExperimentConfig c = default_config();
    c.barrier.mode = RampMode::Static;
    c.barrier.width = width;
    c.detector_x = detector;
    return c;
}

std::string render_report(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    write_report_csv(out, rows);
    return out.str();
}

std::string render_series(const ReflectionSeries& s) {
    std::ostringstream out;
    write_series_csv(out, s);
    return out.str();
}

SweepPlan plan_over(std::vector<SweepAxisValues> axes) {
    SweepPlan plan;
    plan.base = default_config();
    plan.axes = std::move(axes);
    plan.workers = workers();
    return plan;
}

bool strictly_decreasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i] < v[i - 1])) return false;
    }
    return true;
}

std::string list(const std::vector<double>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + num(v[i]);
    return out + "]";
}

// 1. Static baseline.
Outcome static_baseline() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const EvolveResult run = evolve(static_config());
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto& v = run.series.values;
    const Asymptote asym = asymptotic_value(run.series, 0.1);
    o.require(asym.converged && asym.value >= 0.95, "asymptote " + num(asym.value) + " >= 0.95 (converged)");

    // S-shape: falls to a minimum while the initial tail leaves, then rises
    // monotonically with the steepest growth strictly inside the rise.
    const std::size_t lo = static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
    bool monotone = true;
    std::size_t steepest = lo + 1;
    for (std::size_t i = lo + 1; i < v.size(); ++i) {
        monotone = monotone && v[i] >= v[i - 1] - 1e-12;
        if (v[i] - v[i - 1] > v[steepest] - v[steepest - 1]) steepest = i;
    }
    const double max_rise = v[steepest] - v[steepest - 1];
    const double end_rise = v.back() - v[v.size() - 2];
    const bool s_shape = v[lo] < 0.05 && monotone && steepest > lo + 1 && steepest + 1 < v.size() &&
                         end_rise < 0.1 * max_rise;
    o.require(s_shape, "S-shaped rise (min " + num(v[lo]) + ", steepest at t=" + num(run.series.times[steepest]) + ")");
    o.require(seconds < 60.0, "runtime " + num(seconds) + " s < 60 s");
    return o;
}

// 2. Time-domain asymptote vs momentum integral.
Outcome oracle_equivalence() {
    Outcome o;
    for (double width : kWidths) {
        const ExperimentConfig c = static_config(width);
        const Asymptote asym = asymptotic_value(evolve(c).series, 0.1);
        const double oracle = oracles::asymptotic_reflection_integral(c.packet, c.barrier.height0, width);
        const double rel = std::abs(asym.value - oracle) / oracle;
        o.require(asym.converged && rel < 0.02, "width " + num(width) + ": " + num(asym.value) + " vs " +
                                                    num(oracle) + " (rel " + num(rel) + " < 0.02)");
    }
    return o;
}

// 3. Full regime structure at the smallest epsilon.
Outcome superarrival_existence() {
    Outcome o;
    ExperimentConfig c = default_config();
    c.barrier.epsilon = kEpsilons.front();
    const ReflectionSeries stat = evolve(static_config()).series;
    const ReflectionSeries pert = evolve(c).series;
    const double v_g = derived_quantities(c.packet).group_velocity;
    const SuperarrivalReport r =
        analyze(stat, pert, c.barrier.t_p, c.deviation_threshold, c.detector_x, c.barrier.center, v_g);
    o.require(c.barrier.t_p < r.t_d && r.t_d < r.t_c,
              "t_p=" + num(r.t_p) + " < t_d=" + num(r.t_d) + " < t_c=" + num(r.t_c));
    const auto violation = check_regimes(stat, pert, r);
    o.require(!violation, "sample-wise regimes " + (violation ? *violation : std::string("hold")));
    o.require(r.eta > 0.0, "eta=" + num(r.eta));
    return o;
}

// 4. eta, delta_t and v_e/v_g decrease with epsilon at each detector.
Outcome epsilon_monotonicity() {
    Outcome o;
    const auto rows = run_sweep(plan_over({{SweepAxis::Epsilon, kEpsilons}, {SweepAxis::Detector, kDetectors}}));
    for (std::size_t d = 0; d < kDetectors.size(); ++d) {
        std::vector<double> eta, dt, ratio;
        bool ok = true;
        for (std::size_t e = 0; e < kEpsilons.size(); ++e) {
            const SweepRow& row = rows[d * kEpsilons.size() + e];
            ok = ok && row.status == "ok";
            eta.push_back(row.report.eta);
            dt.push_back(row.report.delta_t);
            ratio.push_back(row.report.ratio);
        }
        const std::string where = "x'=" + num(kDetectors[d]);
        o.require(ok, where + " all points have a window");
        o.require(strictly_decreasing(eta), where + " eta " + list(eta));
        o.require(strictly_decreasing(dt), where + " delta_t " + list(dt));
        o.require(strictly_decreasing(ratio), where + " v_e/v_g " + list(ratio));
    }
    return o;
}

// 5. eta vanishes as the barrier narrows at fixed height.
Outcome width_extinction() {
    Outcome o;
    const auto rows = run_sweep(plan_over({{SweepAxis::Epsilon, kEpsilons}, {SweepAxis::Width, kWidths}}));
    for (std::size_t e = 0; e < kEpsilons.size(); ++e) {
        // Rows are ordered width-major; report from widest to narrowest.
        std::vector<double> eta;
        for (std::size_t w = kWidths.size(); w-- > 0;) eta.push_back(rows[w * kEpsilons.size() + e].report.eta);
        const std::string where = "eps=" + num(kEpsilons[e]) + " eta(0.016, 0.008, 0.004)=" + list(eta);
        o.require(strictly_decreasing(eta) && eta.back() < 0.1 * eta.front(),
                  where + " decreasing with eta(0.004) < 0.1 eta(0.016)");
    }
    return o;
}

// 6. No classical superarrivals.
Outcome classical_null() {
    Outcome o;
    const std::size_t n = 100000;
    const ClassicalRun stat = classical_reflection_series(static_config(), n);
    for (double eps : kEpsilons) {
        ExperimentConfig c = default_config();
        c.barrier.epsilon = eps;
        const ClassicalRun pert = classical_reflection_series(c, n);
        double worst = -1.0;
        for (std::size_t i = 0; i < stat.series.size(); ++i) {
            const double rs = stat.series.values[i];
            const double se = std::sqrt(rs * (1.0 - rs) / static_cast<double>(n));
            worst = std::max(worst, pert.series.values[i] - rs - 3.0 * se);
        }
        o.require(worst <= 0.0, "eps=" + num(eps) + " max(R_p - R_s - 3 SE)=" + num(worst) + " <= 0");
    }
    return o;
}

// 7. Superarrivals persist beyond 8 sigma0.
Outcome detector_persistence() {
    Outcome o;
    ExperimentConfig c = default_config();
    c.detector_x = -0.6;
    const double distance = std::abs(c.detector_x - c.packet.x0);
    o.require(distance > 8.0 * c.packet.sigma0, "|x'-x0|=" + num(distance) + " > 8 sigma0=" + num(8.0 * c.packet.sigma0));
    const ReflectionSeries stat = evolve(static_config(0.016, c.detector_x)).series;
    const ReflectionSeries pert = evolve(c).series;
    try {
        const SuperarrivalReport r = analyze(stat, pert, c.barrier.t_p, c.deviation_threshold, c.detector_x,
                                             c.barrier.center, derived_quantities(c.packet).group_velocity);
        o.require(r.eta > 0.0, "eta=" + num(r.eta) + " > 0");
    } catch (const Error& err) {
        o.require(false, std::string("no window: ") + err.what());
    }
    return o;
}

// 8. Numerical integrity.
Outcome numerical_integrity() {
    Outcome o;
    const ExperimentConfig c = default_config();

    const EvolveResult pert = evolve(c);
    o.require(pert.max_norm_drift < 1e-8, "norm drift " + num(pert.max_norm_drift) + " < 1e-8");

    BarrierSchedule free_space = c.barrier.as_static();
    free_space.height0 = 0.0;
    WaveFunction psi = init_gaussian(c.packet, c.grid);
    CrankNicolson free_cn(c.grid, free_space);
    for (int k = 0; k < 400; ++k) free_cn.step(psi);
    const auto [mean, sigma] = oracles::free_gaussian_moments(c.packet, 400 * c.grid.dt);
    const double drift_err = std::abs((mean_position(psi) - c.packet.x0) / (mean - c.packet.x0) - 1.0);
    const double spread_err = std::abs(position_variance(psi) / (sigma * sigma) - 1.0);
    o.require(drift_err < 5e-3, "free drift rel err " + num(drift_err) + " < 0.5%");
    o.require(spread_err < 5e-3, "free spreading rel err " + num(spread_err) + " < 0.5%");

    const WaveFunction initial = init_gaussian(c.packet, c.grid);
    WaveFunction back = initial;
    CrankNicolson static_cn(c.grid, c.barrier.as_static());
    for (std::size_t k = 0; k < c.n_steps(); ++k) static_cn.step(back);
    for (auto& a : back.amplitudes) a = std::conj(a);
    for (std::size_t k = 0; k < c.n_steps(); ++k) static_cn.step(back);
    for (auto& a : back.amplitudes) a = std::conj(a);
    const double fidelity = std::norm(overlap(back, initial));
    o.require(fidelity > 0.999, "time-reversal fidelity " + num(fidelity) + " > 0.999");

    ExperimentConfig coarse = static_config();
    ExperimentConfig fine = coarse;
    fine.grid = build_grid(-1.99995, 1.99995, 40000, coarse.grid.dt / 2.0);
    fine.sample_stride = 2;
    const double r_coarse = evolve(coarse).series.values.back();
    const double r_fine = evolve(fine).series.values.back();
    const double refine = std::abs(r_fine - r_coarse) / r_fine;
    o.require(refine < 5e-3, "grid refinement change " + num(refine) + " < 0.5%");

    const SmoothedBarrier barrier(c.barrier, c.classical.edge_half_width);
    const BarrierSchedule fixed = c.barrier.as_static();
    ClassicalEnsemble ens = sample_ensemble(c.packet, 20000, c.rng_seed);
    std::vector<double> e0;
    for (const auto& q : ens.particles) e0.push_back(particle_energy(q, barrier, fixed.height0));
    for (std::size_t k = 0; k < c.n_steps(); ++k) step_classical(ens, fixed, barrier, c.grid.dt);
    double worst = 0.0;
    for (std::size_t i = 0; i < e0.size(); ++i) {
        worst = std::max(worst, std::abs(particle_energy(ens.particles[i], barrier, fixed.height0) - e0[i]) / e0[i]);
    }
    o.require(worst < 1e-4, "classical energy rel err " + num(worst) + " < 1e-4");
    return o;
}

// 9. Byte-identical outputs for identical inputs, serial or parallel.
Outcome determinism() {
    Outcome o;
    SweepPlan plan = plan_over({{SweepAxis::Epsilon, {2e-5, 1e-4, 2e-4}}});
    plan.workers = 1;
    const auto serial = run_sweep(plan);
    plan.workers = 4;
    const auto parallel = run_sweep(plan);
    bool series_equal = serial.size() == parallel.size();
    for (std::size_t i = 0; series_equal && i < serial.size(); ++i) {
        series_equal = render_series(serial[i].static_series) == render_series(parallel[i].static_series) &&
                       render_series(serial[i].perturbed_series) == render_series(parallel[i].perturbed_series);
    }
    o.require(render_report(serial) == render_report(parallel), "report CSV identical (1 vs 4 workers)");
    o.require(series_equal, "per-point series CSVs identical");

    const ExperimentConfig c = default_config();
    const std::string a = render_series(classical_reflection_series(c, 100000).series);
    const std::string b = render_series(classical_reflection_series(c, 100000).series);
    o.require(a == b, "classical series CSV identical for the same seed");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::map<int, std::pair<std::string, std::function<Outcome()>>> criteria{
        {1, {"static baseline", static_baseline}},
        {2, {"oracle equivalence", oracle_equivalence}},
        {3, {"superarrival existence", superarrival_existence}},
        {4, {"monotonicity in epsilon", epsilon_monotonicity}},
        {5, {"width extinction", width_extinction}},
        {6, {"classical null result", classical_null}},
        {7, {"detector persistence", detector_persistence}},
        {8, {"numerical integrity", numerical_integrity}},
        {9, {"determinism", determinism}},
    };
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
    if (selected.empty()) {
        for (const auto& entry : criteria) selected.push_back(entry.first);
    }

    int failures = 0;
    for (int id : selected) {
        const auto it = criteria.find(id);
        if (it == criteria.end()) {
            std::printf("[FAIL] C%d unknown criterion\n", id);
            ++failures;
            continue;
        }
        Outcome outcome;
        try {
            outcome = it->second.second();
        } catch (const std::exception& e) {
            outcome.require(false, std::string("exception: ") + e.what());
        }
        std::printf("[%s] C%d %s: %s\n", outcome.pass ? "PASS" : "FAIL", id, it->second.first.c_str(),
                    outcome.detail.c_str());
        std::fflush(stdout);
        failures += outcome.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
