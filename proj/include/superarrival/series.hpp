#pragma once

#include <string>
#include <vector>

namespace superarrival {

enum class SeriesKind { Quantum, Classical };

/// Sampled |R(t)|^2 for one run.
struct ReflectionSeries {
    std::vector<double> times;
    std::vector<double> values;
    SeriesKind kind = SeriesKind::Quantum;
    bool perturbed = false;
    double epsilon = 0.0;  // meaningful when perturbed

    std::size_t size() const { return times.size(); }
    std::string label() const;
};

std::string to_string(SeriesKind kind);

/// Throws Error(Domain) unless times are strictly increasing with a uniform
/// stride and every value lies in [0, 1] (1e-9 slack).
void validate(const ReflectionSeries& series);

/// Throws Error(Domain) unless both series sample the same instants.
void require_shared_axis(const ReflectionSeries& a, const ReflectionSeries& b);

}  // namespace superarrival
