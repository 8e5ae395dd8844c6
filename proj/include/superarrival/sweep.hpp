#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "superarrival/config.hpp"
#include "superarrival/observables.hpp"
#include "superarrival/series.hpp"

namespace superarrival {

enum class SweepAxis { Epsilon, Width, Detector };

struct SweepAxisValues {
    SweepAxis axis;
    std::vector<double> values;
};

/// Cartesian product of up to three axes over a base config. Points are
/// ordered detector (outermost), width, epsilon (innermost).
struct SweepPlan {
    std::vector<SweepAxisValues> axes;
    ExperimentConfig base;
    std::size_t workers = 1;
};

struct SweepPoint {
    double epsilon = 0.0;
    double width = 0.0;
    double detector_x = 0.0;
    ExperimentConfig config;
};

struct SweepRow {
    SweepPoint point;
    std::string status = "ok";
    SuperarrivalReport report;
    double t_converge = 0.0;  // measured convergence time of the static series
    ReflectionSeries static_series;
    ReflectionSeries perturbed_series;
};

/// Plan files are config files plus sweep.epsilon / sweep.width /
/// sweep.detector_x (comma-separated values) and sweep.workers.
SweepPlan parse_plan(const std::string& text);
SweepPlan load_plan(const std::filesystem::path& path);

/// Throws Error(Config) if an axis is empty, unsorted, or yields an invalid config.
std::vector<SweepPoint> expand(const SweepPlan& plan);

/// Runs the static series once per (width, detector) and one perturbed
/// series per point, on plan.workers threads. Row order follows expand().
/// Per-point failures are recorded in SweepRow::status.
std::vector<SweepRow> run_sweep(const SweepPlan& plan);

std::string to_string(SweepAxis axis);

}  // namespace superarrival
