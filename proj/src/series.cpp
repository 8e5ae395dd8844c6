#include "superarrival/series.hpp"

#include <algorithm>
#include <cmath>

#include "superarrival/config.hpp"
#include "superarrival/errors.hpp"

namespace superarrival {

std::string ReflectionSeries::label() const {
    if (!perturbed) return "static";
    return "perturbed(" + format_number(epsilon) + ")";
}

std::string to_string(SeriesKind kind) {
    return kind == SeriesKind::Quantum ? "quantum" : "classical";
}

void validate(const ReflectionSeries& s) {
    if (s.times.size() != s.values.size()) {
        throw Error(ErrorKind::Domain, "series: times and values differ in length");
    }
    if (s.times.size() >= 2) {
        const double stride = s.times[1] - s.times[0];
        for (std::size_t i = 1; i < s.times.size(); ++i) {
            const double d = s.times[i] - s.times[i - 1];
            if (!(d > 0.0)) throw Error(ErrorKind::Domain, "series: times not strictly increasing");
            if (std::abs(d - stride) > 1e-9 * stride) {
                throw Error(ErrorKind::Domain, "series: non-uniform stride");
            }
        }
    }
    for (double v : s.values) {
        if (v < -1e-9 || v > 1.0 + 1e-9) throw Error(ErrorKind::Domain, "series: value outside [0, 1]");
    }
}

void require_shared_axis(const ReflectionSeries& a, const ReflectionSeries& b) {
    if (a.times.size() != b.times.size() || a.values.size() != a.times.size() ||
        b.values.size() != b.times.size()) {
        throw Error(ErrorKind::Domain, "series: time axes differ in length");
    }
    for (std::size_t i = 0; i < a.times.size(); ++i) {
        if (std::abs(a.times[i] - b.times[i]) > 1e-12 * std::max(1.0, std::abs(a.times[i]))) {
            throw Error(ErrorKind::Domain, "series: time axes differ");
        }
    }
}

}  // namespace superarrival
