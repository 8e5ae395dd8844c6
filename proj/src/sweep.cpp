#include "superarrival/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "superarrival/errors.hpp"
#include "superarrival/tdse.hpp"

namespace superarrival {

namespace {

std::vector<double> parse_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::stringstream in(value);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        out.push_back(parse_number(key, first == std::string::npos ? std::string() : item.substr(first, last - first + 1)));
    }
    return out;
}

std::string status_token(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Config: return "config_error";
        case ErrorKind::Resolution: return "resolution_error";
        case ErrorKind::Overlap: return "overlap_error";
        case ErrorKind::NoDeviation: return "no_deviation";
        case ErrorKind::NoCrossing: return "no_crossing";
        case ErrorKind::Domain: return "domain_error";
    }
    return "error";
}

// Runs job(i) for i in [0, count) on up to `workers` threads.
void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& job) {
    workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) job(i);
        });
    }
}

ReflectionSeries static_series_for(const ExperimentConfig& config) {
    ExperimentConfig s = config;
    s.barrier.mode = RampMode::Static;
    return evolve(s).series;
}

}  // namespace

std::string to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::Epsilon: return "epsilon";
        case SweepAxis::Width: return "width";
        case SweepAxis::Detector: return "detector_x";
    }
    return "?";
}

SweepPlan parse_plan(const std::string& text) {
    SweepPlan plan;
    plan.base = default_config();
    for (const auto& [key, value] : parse_key_values(text)) {
        if (key == "sweep.epsilon") plan.axes.push_back({SweepAxis::Epsilon, parse_list(key, value)});
        else if (key == "sweep.width") plan.axes.push_back({SweepAxis::Width, parse_list(key, value)});
        else if (key == "sweep.detector_x") plan.axes.push_back({SweepAxis::Detector, parse_list(key, value)});
        else if (key == "sweep.workers") plan.workers = static_cast<std::size_t>(parse_count(key, value));
        else {
            apply_key(plan.base, key, value);
        }
    }
    if (plan.axes.empty()) throw Error(ErrorKind::Config, "plan: no sweep.* axis given");
    return plan;
}

SweepPlan load_plan(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Config, "plan not found: " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_plan(text.str());
}

std::vector<SweepPoint> expand(const SweepPlan& plan) {
    std::vector<double> eps{plan.base.barrier.epsilon};
    std::vector<double> widths{plan.base.barrier.width};
    std::vector<double> detectors{plan.base.detector_x};
    for (const auto& axis : plan.axes) {
        if (axis.values.empty()) throw Error(ErrorKind::Config, "plan: axis " + to_string(axis.axis) + " is empty");
        if (std::adjacent_find(axis.values.begin(), axis.values.end(), std::greater_equal<>()) != axis.values.end()) {
            throw Error(ErrorKind::Config, "plan: axis " + to_string(axis.axis) + " must be strictly increasing");
        }
        switch (axis.axis) {
            case SweepAxis::Epsilon: eps = axis.values; break;
            case SweepAxis::Width: widths = axis.values; break;
            case SweepAxis::Detector: detectors = axis.values; break;
        }
    }
    std::vector<SweepPoint> points;
    for (double d : detectors) {
        for (double w : widths) {
            for (double e : eps) {
                SweepPoint pt;
                pt.epsilon = e;
                pt.width = w;
                pt.detector_x = d;
                pt.config = plan.base;
                pt.config.barrier.mode = RampMode::LinearRamp;
                pt.config.barrier.epsilon = e;
                pt.config.barrier.width = w;
                pt.config.detector_x = d;
                refresh_derived(pt.config);
                try {
                    validate(pt.config);
                } catch (const Error& err) {
                    throw Error(ErrorKind::Config, "plan point (eps=" + format_number(e) + ", width=" +
                                                       format_number(w) + ", x'=" + format_number(d) +
                                                       "): " + err.what());
                }
                points.push_back(std::move(pt));
            }
        }
    }
    return points;
}

std::vector<SweepRow> run_sweep(const SweepPlan& plan) {
    const auto points = expand(plan);

    // One static run per distinct (width, detector).
    std::map<std::pair<double, double>, std::size_t> static_index;
    std::vector<std::size_t> static_owner;  // point index that defines each static run
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto key = std::make_pair(points[i].width, points[i].detector_x);
        if (static_index.emplace(key, static_owner.size()).second) static_owner.push_back(i);
    }
    struct StaticResult {
        ReflectionSeries series;
        std::string status = "ok";
    };
    std::vector<StaticResult> statics(static_owner.size());
    parallel_for(statics.size(), plan.workers, [&](std::size_t s) {
        try {
            statics[s].series = static_series_for(points[static_owner[s]].config);
        } catch (const Error& err) {
            statics[s].status = status_token(err.kind());
        }
    });

    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<SweepRow> rows(points.size());
    parallel_for(points.size(), plan.workers, [&](std::size_t i) {
        SweepRow& row = rows[i];
        row.point = points[i];
        const ExperimentConfig& cfg = row.point.config;
        SuperarrivalReport& r = row.report;
        r = SuperarrivalReport{nan, nan, nan, nan, nan, nan, nan, nan, nan, nan, nan, nan};
        r.t_p = cfg.barrier.t_p;
        r.v_g = derived_quantities(cfg.packet).group_velocity;
        r.distance = std::abs(cfg.detector_x - cfg.barrier.center);
        r.deviation_threshold = cfg.deviation_threshold;

        const StaticResult& st = statics[static_index.at({row.point.width, row.point.detector_x})];
        if (st.status != "ok") {
            row.status = st.status;
            return;
        }
        row.static_series = st.series;
        row.t_converge = convergence_time(st.series, 1e-3);
        try {
            row.perturbed_series = evolve(cfg).series;
            r = analyze(row.static_series, row.perturbed_series, cfg.barrier.t_p, cfg.deviation_threshold,
                        cfg.detector_x, cfg.barrier.center, r.v_g);
        } catch (const Error& err) {
            row.status = status_token(err.kind());
        }
    });
    return rows;
}

}  // namespace superarrival
