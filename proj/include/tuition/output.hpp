#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tuition/engine.hpp"
#include "tuition/scenarios.hpp"

namespace tuition {

inline constexpr std::string_view kCsvSchemaVersion = "tuition-dyn/trajectory/1";

/// Column order of the trajectory CSV.
const std::vector<std::string>& trajectory_columns();

/// "%.6g"
std::string format_number(double v);

void write_trajectory_csv(const Trajectory& traj, std::ostream& out);
void write_trajectory_json(const Trajectory& traj, std::ostream& out);

/// Writes <dir>/<stem>.csv and/or <dir>/<stem>.json. Throws std::runtime_error on I/O failure.
void write_trajectory(const Trajectory& traj, const std::filesystem::path& dir, const std::string& stem, bool csv,
                      bool json);

/// A parsed CSV row: year, college and the numeric columns in schema order.
struct CsvRow {
  int year = 0;
  std::string college;
  std::vector<double> values;  // every column after "college"
};
std::vector<CsvRow> read_trajectory_csv(std::istream& in);

/// Per-scenario rank shares and horizon values, then the orderings.
void write_comparison(const std::vector<ScenarioReport>& reports, const std::vector<MetricOrdering>& orderings,
                      std::ostream& out);

/// Industry series for every scenario, one row per year: year, then
/// <scenario>_<metric> columns.
void write_industry_csv(const std::vector<ScenarioReport>& reports, std::ostream& out);

}  // namespace tuition
