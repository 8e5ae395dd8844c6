#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superarrival/classical.hpp"
#include "superarrival/config.hpp"
#include "superarrival/errors.hpp"
#include "superarrival/observables.hpp"
#include "superarrival/oracles.hpp"
#include "superarrival/packet.hpp"
#include "superarrival/tdse.hpp"

namespace py = pybind11;
using namespace superarrival;

namespace {

py::array_t<double> to_array(const std::vector<double>& v) {
    return py::array_t<double>(static_cast<py::ssize_t>(v.size()), v.data());
}

ReflectionSeries from_arrays(const std::vector<double>& times, const std::vector<double>& values) {
    ReflectionSeries s;
    s.times = times;
    s.values = values;
    validate(s);
    return s;
}

std::string kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Config: return "config";
        case ErrorKind::Resolution: return "resolution";
        case ErrorKind::Overlap: return "overlap";
        case ErrorKind::NoDeviation: return "no_deviation";
        case ErrorKind::NoCrossing: return "no_crossing";
        case ErrorKind::Domain: return "domain";
    }
    return "unknown";
}

}  // namespace

PYBIND11_MODULE(_superarrival, m) {
    static py::exception<Error> error_type(m, "SuperarrivalError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::handle(error_type)(e.what());
            exc.attr("kind") = kind_name(e.kind());
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    py::class_<ExperimentConfig>(m, "Config")
        .def(py::init(&default_config))
        .def("set", [](ExperimentConfig& c, const std::string& key, py::object value) {
            apply_key(c, key, py::str(value).cast<std::string>());
            refresh_derived(c);
        }, py::arg("key"), py::arg("value"))
        .def("entries", [](const ExperimentConfig& c) {
            py::dict out;
            for (const auto& [k, v] : config_entries(c)) out[py::str(k)] = v;
            return out;
        })
        .def("validate", [](const ExperimentConfig& c) { return validate(c); })
        .def("format", &format_config)
        .def_property_readonly("n_steps", &ExperimentConfig::n_steps)
        .def_property_readonly("dx", [](const ExperimentConfig& c) { return c.grid.dx; })
        .def_property_readonly("dt", [](const ExperimentConfig& c) { return c.grid.dt; })
        .def_property_readonly("barrier_height", [](const ExperimentConfig& c) { return c.barrier.height0; })
        .def("__repr__", &format_config);

    m.def("default_config", &default_config);
    m.def("parse_config", [](const std::string& text) { return parse_config(text); }, py::arg("text"));
    m.def("load_config", [](const std::string& path) { return load_config(path); }, py::arg("path"));

    m.def("derived_quantities", [](const ExperimentConfig& c) {
        const DerivedQuantities d = derived_quantities(c.packet);
        py::dict out;
        out["energy"] = d.energy;
        out["group_velocity"] = d.group_velocity;
        out["momentum_spread"] = momentum_spread(c.packet);
        return out;
    }, py::arg("config"));

    m.def("evolve", [](const ExperimentConfig& c, const std::vector<double>& snapshot_times) {
        EvolveResult r;
        {
            py::gil_scoped_release release;
            r = evolve(c, snapshot_times);
        }
        py::list snaps;
        for (const auto& s : r.snapshots) {
            py::dict d;
            d["t"] = s.t;
            d["x"] = to_array(s.x);
            d["density"] = to_array(s.density);
            snaps.append(d);
        }
        py::dict out;
        out["times"] = to_array(r.series.times);
        out["values"] = to_array(r.series.values);
        out["snapshots"] = snaps;
        out["max_norm_drift"] = r.max_norm_drift;
        out["warnings"] = r.warnings;
        return out;
    }, py::arg("config"), py::arg("snapshot_times") = std::vector<double>{});

    m.def("classical_series", [](const ExperimentConfig& c, std::size_t n) {
        ClassicalRun r;
        {
            py::gil_scoped_release release;
            r = classical_reflection_series(c, n);
        }
        py::dict out;
        out["times"] = to_array(r.series.times);
        out["values"] = to_array(r.series.values);
        return out;
    }, py::arg("config"), py::arg("n"));

    m.def("analyze", [](const std::vector<double>& times, const std::vector<double>& static_values,
                        const std::vector<double>& perturbed_values, const ExperimentConfig& c) {
        const ReflectionSeries stat = from_arrays(times, static_values);
        const ReflectionSeries pert = from_arrays(times, perturbed_values);
        const SuperarrivalReport r = analyze(stat, pert, c.barrier.t_p, c.deviation_threshold, c.detector_x,
                                             c.barrier.center, derived_quantities(c.packet).group_velocity);
        py::dict out;
        out["t_p"] = r.t_p;
        out["t_d"] = r.t_d;
        out["t_c"] = r.t_c;
        out["delta_t"] = r.delta_t;
        out["eta"] = r.eta;
        out["I_p"] = r.I_p;
        out["I_s"] = r.I_s;
        out["v_e"] = r.v_e;
        out["v_g"] = r.v_g;
        out["ratio"] = r.ratio;
        out["distance"] = r.distance;
        return out;
    }, py::arg("times"), py::arg("static_values"), py::arg("perturbed_values"), py::arg("config"));

    m.def("asymptote", [](const std::vector<double>& times, const std::vector<double>& values, double tail_fraction) {
        const Asymptote a = asymptotic_value(from_arrays(times, values), tail_fraction);
        return py::make_tuple(a.value, a.converged);
    }, py::arg("times"), py::arg("values"), py::arg("tail_fraction") = 0.1);

    m.def("plane_wave_reflection", &oracles::plane_wave_reflection, py::arg("p"), py::arg("height"), py::arg("width"));
    m.def("plane_wave_transmission", &oracles::plane_wave_transmission, py::arg("p"), py::arg("height"),
          py::arg("width"));
    m.def("reflection_integral", [](const ExperimentConfig& c) {
        return oracles::asymptotic_reflection_integral(c.packet, c.barrier.height0, c.barrier.width);
    }, py::arg("config"));
    m.def("free_gaussian_moments", [](const ExperimentConfig& c, double t) {
        return oracles::free_gaussian_moments(c.packet, t);
    }, py::arg("config"), py::arg("t"));
}
