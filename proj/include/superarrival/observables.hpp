#pragma once

#include <optional>
#include <utility>

#include "superarrival/series.hpp"

namespace superarrival {

/// Headline quantities extracted from a (static, perturbed) series pair.
struct SuperarrivalReport {
    double t_p = 0.0;
    double t_d = 0.0;
    double t_c = 0.0;
    double delta_t = 0.0;
    double eta = 0.0;
    double I_p = 0.0;
    double I_s = 0.0;
    double v_e = 0.0;
    double v_g = 0.0;
    double ratio = 0.0;
    double distance = 0.0;             // barrier centre to detector
    double deviation_threshold = 0.0;  // delta used for t_d
};

/// First instant at which |R_p - R_s| exceeds delta, linearly interpolated
/// between the bracketing samples. Throws Error(NoDeviation).
double detect_t_d(const ReflectionSeries& stat, const ReflectionSeries& pert, double delta);

/// First sign change of R_p - R_s after t_d, linearly interpolated.
/// Throws Error(Domain) if R_p <= R_s just after t_d, Error(NoCrossing) if
/// the series end first.
double detect_t_c(const ReflectionSeries& stat, const ReflectionSeries& pert, double t_d);

struct EtaResult {
    double eta = 0.0;
    double I_p = 0.0;
    double I_s = 0.0;
};

/// Trapezoidal integrals of both series over [t_begin, t_end]; the window
/// ends are linearly interpolated. Throws Error(Domain) if t_end <= t_begin.
EtaResult compute_eta(const ReflectionSeries& stat, const ReflectionSeries& pert,
                      double t_begin, double t_end);

/// v_e = D / (t_d - t_p) with D = |detector_x - barrier_center|.
/// Returns (v_e, v_e / v_g). Throws Error(Domain) if t_d <= t_p.
std::pair<double, double> signal_velocity(double t_p, double t_d, double detector_x,
                                          double barrier_center, double v_g);

struct Asymptote {
    double value = 0.0;
    double slope = 0.0;  // least-squares slope of the tail, per unit time
    bool converged = false;
};

/// Mean of the last tail_fraction of samples. Converged iff
/// |slope| * (series time span) <= 1e-3.
Asymptote asymptotic_value(const ReflectionSeries& series, double tail_fraction);

/// Same as asymptotic_value but throws Error(Domain) if the tail is not flat.
double asymptotic_reflection(const ReflectionSeries& series, double tail_fraction);

/// First sample time after which the series stays within tol of its final value.
double convergence_time(const ReflectionSeries& series, double tol);

/// Full pipeline: t_d, t_c, eta, v_e. Throws the detectors' errors.
SuperarrivalReport analyze(const ReflectionSeries& stat, const ReflectionSeries& pert,
                           double t_p, double delta, double detector_x,
                           double barrier_center, double v_g);

/// Checks the three-regime structure sample-wise: |R_p - R_s| <= delta on
/// (0, t_d], R_p > R_s on (t_d, t_c], R_p < R_s on (t_c, end]. Returns an
/// empty optional on success, else a description of the first violation.
std::optional<std::string> check_regimes(const ReflectionSeries& stat, const ReflectionSeries& pert,
                                         const SuperarrivalReport& report);

}  // namespace superarrival
