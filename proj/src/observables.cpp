#include "superarrival/observables.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <numeric>

#include "superarrival/config.hpp"
#include "superarrival/errors.hpp"

namespace superarrival {

namespace {

double diff_at(const ReflectionSeries& s, const ReflectionSeries& p, std::size_t i) {
    return p.values[i] - s.values[i];
}

// Index of the first sample strictly after t.
std::size_t first_after(const std::vector<double>& times, double t) {
    return static_cast<std::size_t>(std::upper_bound(times.begin(), times.end(), t) - times.begin());
}

double interpolate(const ReflectionSeries& s, double t) {
    const auto& ts = s.times;
    if (t <= ts.front()) return s.values.front();
    if (t >= ts.back()) return s.values.back();
    const std::size_t i = first_after(ts, t);
    const double theta = (t - ts[i - 1]) / (ts[i] - ts[i - 1]);
    return s.values[i - 1] + theta * (s.values[i] - s.values[i - 1]);
}

// Trapezoidal integral of the piecewise-linear series over [a, b].
double integrate(const ReflectionSeries& s, double a, double b) {
    const auto& ts = s.times;
    double total = 0.0;
    double prev_t = a;
    double prev_v = interpolate(s, a);
    for (std::size_t i = first_after(ts, a); i < ts.size() && ts[i] < b; ++i) {
        total += 0.5 * (prev_v + s.values[i]) * (ts[i] - prev_t);
        prev_t = ts[i];
        prev_v = s.values[i];
    }
    total += 0.5 * (prev_v + interpolate(s, b)) * (b - prev_t);
    return total;
}

}  // namespace

double detect_t_d(const ReflectionSeries& stat, const ReflectionSeries& pert, double delta) {
    require_shared_axis(stat, pert);
    if (!(delta > 0.0)) throw Error(ErrorKind::Domain, "detect_t_d: delta > 0 violated");
    const auto& ts = stat.times;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const double d = std::abs(diff_at(stat, pert, i));
        if (d <= delta) continue;
        if (i == 0) return ts[0];
        const double d_prev = std::abs(diff_at(stat, pert, i - 1));
        const double theta = (delta - d_prev) / (d - d_prev);
        return ts[i - 1] + theta * (ts[i] - ts[i - 1]);
    }
    throw Error(ErrorKind::NoDeviation, "no deviation above delta=" + format_number(delta));
}

double detect_t_c(const ReflectionSeries& stat, const ReflectionSeries& pert, double t_d) {
    require_shared_axis(stat, pert);
    const auto& ts = stat.times;
    const std::size_t start = first_after(ts, t_d);
    if (start >= ts.size() || !(diff_at(stat, pert, start) > 0.0)) {
        throw Error(ErrorKind::Domain, "detect_t_c: R_p > R_s just after t_d violated");
    }
    for (std::size_t j = start + 1; j < ts.size(); ++j) {
        const double d = diff_at(stat, pert, j);
        if (d > 0.0) continue;
        const double d_prev = diff_at(stat, pert, j - 1);
        const double theta = d_prev / (d_prev - d);
        return ts[j - 1] + theta * (ts[j] - ts[j - 1]);
    }
    throw Error(ErrorKind::NoCrossing, "series end before R_p and R_s cross");
}

EtaResult compute_eta(const ReflectionSeries& stat, const ReflectionSeries& pert, double t_begin, double t_end) {
    require_shared_axis(stat, pert);
    if (!(t_end > t_begin)) throw Error(ErrorKind::Domain, "compute_eta: degenerate window t_c <= t_d");
    EtaResult r;
    r.I_p = integrate(pert, t_begin, t_end);
    r.I_s = integrate(stat, t_begin, t_end);
    if (!(r.I_s > 0.0)) throw Error(ErrorKind::Domain, "compute_eta: I_s > 0 violated");
    r.eta = (r.I_p - r.I_s) / r.I_s;
    return r;
}

std::pair<double, double> signal_velocity(double t_p, double t_d, double detector_x, double barrier_center,
                                          double v_g) {
    if (!(t_d > t_p)) throw Error(ErrorKind::Domain, "signal_velocity: t_d > t_p violated");
    const double v_e = std::abs(detector_x - barrier_center) / (t_d - t_p);
    return {v_e, v_e / v_g};
}

Asymptote asymptotic_value(const ReflectionSeries& series, double tail_fraction) {
    const std::size_t n = series.size();
    if (n < 2 || !(tail_fraction > 0.0) || tail_fraction > 1.0) {
        throw Error(ErrorKind::Domain, "asymptotic_value: need >= 2 samples and tail_fraction in (0, 1]");
    }
    const std::size_t m =
        std::clamp<std::size_t>(static_cast<std::size_t>(std::llround(tail_fraction * static_cast<double>(n))), 2, n);
    const std::size_t first = n - m;
    double mean_t = 0.0;
    double mean_v = 0.0;
    for (std::size_t i = first; i < n; ++i) {
        mean_t += series.times[i];
        mean_v += series.values[i];
    }
    mean_t /= static_cast<double>(m);
    mean_v /= static_cast<double>(m);
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = first; i < n; ++i) {
        const double u = series.times[i] - mean_t;
        sxy += u * (series.values[i] - mean_v);
        sxx += u * u;
    }
    Asymptote a;
    a.value = mean_v;
    a.slope = sxx > 0.0 ? sxy / sxx : 0.0;
    const double span = series.times.back() - series.times.front();
    a.converged = std::abs(a.slope) * span <= 1e-3;
    return a;
}

double asymptotic_reflection(const ReflectionSeries& series, double tail_fraction) {
    const Asymptote a = asymptotic_value(series, tail_fraction);
    if (!a.converged) {
        throw Error(ErrorKind::Domain, "asymptotic_reflection: tail not converged (slope " + format_number(a.slope) + ")");
    }
    return a.value;
}

double convergence_time(const ReflectionSeries& series, double tol) {
    const double final_value = series.values.back();
    for (std::size_t i = series.size(); i-- > 0;) {
        if (std::abs(series.values[i] - final_value) > tol) {
            return i + 1 < series.size() ? series.times[i + 1] : series.times.back();
        }
    }
    return series.times.front();
}

SuperarrivalReport analyze(const ReflectionSeries& stat, const ReflectionSeries& pert, double t_p, double delta,
                           double detector_x, double barrier_center, double v_g) {
    SuperarrivalReport r;
    r.t_p = t_p;
    r.deviation_threshold = delta;
    r.v_g = v_g;
    r.distance = std::abs(detector_x - barrier_center);
    r.t_d = detect_t_d(stat, pert, delta);
    r.t_c = detect_t_c(stat, pert, r.t_d);
    r.delta_t = r.t_c - r.t_d;
    const EtaResult e = compute_eta(stat, pert, r.t_d, r.t_c);
    r.eta = e.eta;
    r.I_p = e.I_p;
    r.I_s = e.I_s;
    std::tie(r.v_e, r.ratio) = signal_velocity(t_p, r.t_d, detector_x, barrier_center, v_g);
    return r;
}

std::optional<std::string> check_regimes(const ReflectionSeries& stat, const ReflectionSeries& pert,
                                         const SuperarrivalReport& report) {
    require_shared_axis(stat, pert);
    if (!(report.t_c > report.t_d && report.t_d > report.t_p)) {
        return "t_c > t_d > t_p violated";
    }
    for (std::size_t i = 0; i < stat.size(); ++i) {
        const double t = stat.times[i];
        const double d = diff_at(stat, pert, i);
        if (t <= report.t_d) {
            if (t > 0.0 && std::abs(d) > report.deviation_threshold) {
                return "|R_p - R_s| <= delta violated at t=" + format_number(t);
            }
        } else if (t <= report.t_c) {
            if (!(d > 0.0)) return "R_p > R_s violated at t=" + format_number(t);
        } else if (!(d < 0.0)) {
            return "R_p < R_s violated at t=" + format_number(t);
        }
    }
    return std::nullopt;
}

}  // namespace superarrival
