#pragma once

#include <filesystem>
#include <ostream>
#include <vector>

#include "superarrival/series.hpp"
#include "superarrival/sweep.hpp"
#include "superarrival/tdse.hpp"

namespace superarrival {

/// "# kind=... label=..." header line, then t,R rows.
void write_series_csv(std::ostream& out, const ReflectionSeries& series);
void write_snapshot_csv(std::ostream& out, const Snapshot& snapshot);
void write_report_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Matplotlib scripts that plot the CSVs in their own directory. They are
/// written next to the data; nothing here runs them.
std::string series_plot_script();
std::string report_plot_script();

/// Writes text to path, creating parent directories. Throws Error(Config) on I/O failure.
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace superarrival
