#include "superarrival/csv.hpp"

#include <fstream>

#include "superarrival/config.hpp"
#include "superarrival/errors.hpp"

namespace superarrival {

void write_series_csv(std::ostream& out, const ReflectionSeries& series) {
    out << "# kind=" << to_string(series.kind) << " label=" << series.label() << "\n";
    out << "t,R\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out << format_number(series.times[i]) << ',' << format_number(series.values[i]) << '\n';
    }
}

void write_snapshot_csv(std::ostream& out, const Snapshot& snapshot) {
    out << "# t=" << format_number(snapshot.t) << "\n";
    out << "x,|psi|^2\n";
    for (std::size_t j = 0; j < snapshot.x.size(); ++j) {
        out << format_number(snapshot.x[j]) << ',' << format_number(snapshot.density[j]) << '\n';
    }
}

void write_report_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "eps,width,x_prime,t_p,t_d,t_c,delta_t,I_p,I_s,eta,v_e,v_g,ratio,delta_threshold,"
           "status,distance_ref,D,t_converge";
    const auto provenance = config_entries(default_config());
    for (const auto& [key, value] : provenance) out << ",cfg." << key;
    out << '\n';
    for (const auto& row : rows) {
        const auto& r = row.report;
        const double fields[] = {row.point.epsilon, row.point.width, row.point.detector_x, r.t_p, r.t_d,
                                 r.t_c, r.delta_t, r.I_p, r.I_s, r.eta, r.v_e, r.v_g, r.ratio,
                                 r.deviation_threshold};
        bool first = true;
        for (double f : fields) {
            if (!first) out << ',';
            out << format_number(f);
            first = false;
        }
        out << ',' << row.status << ",center," << format_number(r.distance) << ','
            << format_number(row.t_converge);
        for (const auto& entry : config_entries(row.point.config)) out << ',' << entry.second;
        out << '\n';
    }
}

std::string series_plot_script() {
    return R"(# Plots every series CSV in this directory: t versus R.
import glob
import os

import matplotlib.pyplot as plt

here = os.path.dirname(os.path.abspath(__file__))
fig, ax = plt.subplots()
for path in sorted(glob.glob(os.path.join(here, "*.csv"))):
    with open(path) as f:
        header = f.readline().strip()
        if not header.startswith("# kind="):
            continue
        f.readline()
        rows = [line.split(",") for line in f if line.strip()]
    ax.plot([float(r[0]) for r in rows], [float(r[1]) for r in rows], label=os.path.basename(path))
ax.set_xlabel("t")
ax.set_ylabel("|R(t)|^2")
ax.legend(fontsize="small")
fig.savefig(os.path.join(here, "series.png"), dpi=150)
)";
}

std::string report_plot_script() {
    return R"(# Plots eta, delta_t and v_e/v_g against epsilon from report.csv,
# one curve per (width, x_prime).
import csv
import os
from collections import defaultdict

import matplotlib.pyplot as plt

here = os.path.dirname(os.path.abspath(__file__))
with open(os.path.join(here, "report.csv")) as f:
    rows = [r for r in csv.DictReader(f) if r["status"] == "ok"]
curves = defaultdict(list)
for r in rows:
    curves[(r["width"], r["x_prime"])].append(r)
fig, axes = plt.subplots(1, 3, figsize=(12, 4))
for (width, xp), pts in sorted(curves.items()):
    eps = [float(p["eps"]) for p in pts]
    label = "b=%g x'=%g" % (float(width), float(xp))
    axes[0].plot(eps, [float(p["eta"]) for p in pts], "o-", label=label)
    axes[1].plot(eps, [float(p["delta_t"]) for p in pts], "o-", label=label)
    axes[2].plot(eps, [float(p["ratio"]) for p in pts], "o-", label=label)
for ax, name in zip(axes, ["eta", "delta_t", "v_e/v_g"]):
    ax.set_xlabel("epsilon")
    ax.set_ylabel(name)
axes[0].legend(fontsize="small")
fig.tight_layout()
fig.savefig(os.path.join(here, "report.png"), dpi=150)
)";
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) throw Error(ErrorKind::Config, "cannot create directory " + path.parent_path().string());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Config, "cannot write " + path.string());
    out << text;
    if (!out) throw Error(ErrorKind::Config, "write failed: " + path.string());
}

}  // namespace superarrival
