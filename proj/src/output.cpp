#include "tuition/output.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tuition {

namespace {

struct Column {
  const char* name;
  double (*get)(const Sample&, int);
};

const Column kColumns[] = {
    {"rank", [](const Sample& s, int i) { return static_cast<double>(s.market.ranks[i]); }},
    {"applications", [](const Sample& s, int i) { return s.aux[i].applications; }},
    {"admit_rate", [](const Sample& s, int i) { return s.aux[i].admit_rate; }},
    {"yield", [](const Sample& s, int i) { return s.aux[i].yield; }},
    {"enrolled", [](const Sample& s, int i) { return s.state[i].students; }},
    {"tuition", [](const Sample& s, int i) { return s.state[i].sticker_price; }},
    {"net_tuition", [](const Sample& s, int i) { return s.aux[i].net_price; }},
    {"financial_aid", [](const Sample& s, int i) { return s.aux[i].aid_offer; }},
    {"discount_rate", [](const Sample& s, int i) { return s.aux[i].discount_rate; }},
    {"faculty", [](const Sample& s, int i) { return s.state[i].faculty; }},
    {"load_index", [](const Sample& s, int i) { return s.aux[i].load_index; }},
    {"Q_F", [](const Sample& s, int i) { return s.aux[i].experience; }},
    {"Q", [](const Sample& s, int i) { return s.aux[i].reputation; }},
    {"student_facilities", [](const Sample& s, int i) { return s.state[i].student_space; }},
    {"planned_facilities", [](const Sample& s, int i) { return s.state[i].planned_student_space; }},
    {"expenditures", [](const Sample& s, int i) { return s.aux[i].expenditures; }},
    {"revenue", [](const Sample& s, int i) { return s.aux[i].revenue; }},
    {"surplus", [](const Sample& s, int i) { return s.aux[i].surplus; }},
    {"cash", [](const Sample& s, int i) { return s.state[i].cash; }},
    {"debt", [](const Sample& s, int i) { return s.state[i].debt; }},
    {"endowment", [](const Sample& s, int i) { return s.state[i].endowment; }},
    {"expenditure_per_student", [](const Sample& s, int i) { return s.aux[i].expenditure_per_student; }},
};

const char* kCollege[] = {"A", "B"};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

}  // namespace

const std::vector<std::string>& trajectory_columns() {
  static const std::vector<std::string> cols = [] {
    std::vector<std::string> c{"year", "college"};
    for (const Column& col : kColumns) c.emplace_back(col.name);
    return c;
  }();
  return cols;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
  out << "# schema " << kCsvSchemaVersion << " scenario=" << (traj.scenario_id.empty() ? "-" : traj.scenario_id)
      << " dt=" << format_number(traj.dt) << " config_hash=" << std::hex << std::setw(16) << std::setfill('0')
      << traj.config_hash << std::dec << std::setfill(' ') << '\n';
  const auto& cols = trajectory_columns();
  for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << cols[c];
  out << '\n';
  for (const Sample& s : traj.samples) {
    for (int i = 0; i < 2; ++i) {
      out << s.year << ',' << kCollege[i];
      for (const Column& col : kColumns) out << ',' << format_number(col.get(s, i));
      out << '\n';
    }
  }
}

void write_trajectory_json(const Trajectory& traj, std::ostream& out) {
  using nlohmann::ordered_json;
  ordered_json doc;
  std::ostringstream hash;
  hash << std::hex << std::setw(16) << std::setfill('0') << traj.config_hash;
  doc["metadata"] = {{"schema", kCsvSchemaVersion},
                     {"scenario", traj.scenario_id},
                     {"dt", traj.dt},
                     {"config_hash", hash.str()},
                     {"years", traj.samples.size()}};
  for (int i = 0; i < 2; ++i) {
    ordered_json college;
    ordered_json years = ordered_json::array();
    for (const Sample& s : traj.samples) years.push_back(s.year);
    college["year"] = years;
    for (const Column& col : kColumns) {
      ordered_json series = ordered_json::array();
      // Same 6 significant digits as the CSV so both files carry identical values.
      for (const Sample& s : traj.samples) series.push_back(std::stod(format_number(col.get(s, i))));
      college[col.name] = series;
    }
    doc["colleges"][kCollege[i]] = college;
  }
  out << doc.dump(2) << '\n';
}

void write_trajectory(const Trajectory& traj, const std::filesystem::path& dir, const std::string& stem, bool csv,
                      bool json) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
  auto write = [&](const std::string& ext, void (*fn)(const Trajectory&, std::ostream&)) {
    const auto path = dir / (stem + ext);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
    fn(traj, f);
    if (!f) throw std::runtime_error("write failed for " + path.string());
  };
  if (csv) write(".csv", write_trajectory_csv);
  if (json) write(".json", write_trajectory_json);
}

std::vector<CsvRow> read_trajectory_csv(std::istream& in) {
  std::vector<CsvRow> rows;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto cells = split(line);
    if (!header) {
      if (cells != trajectory_columns()) throw std::runtime_error("unexpected CSV header");
      header = true;
      continue;
    }
    if (cells.size() != trajectory_columns().size()) throw std::runtime_error("short CSV row: " + line);
    CsvRow r;
    r.year = std::stoi(cells[0]);
    r.college = cells[1];
    for (std::size_t c = 2; c < cells.size(); ++c) r.values.push_back(std::stod(cells[c]));
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_comparison(const std::vector<ScenarioReport>& reports, const std::vector<MetricOrdering>& orderings,
                      std::ostream& out) {
  auto share = [](const std::optional<double>& s) { return s ? format_number(100.0 * *s) + "%" : std::string("n/a"); };
  out << "scenario  A_first  B_first  tuition  debt  expenditure_per_student\n";
  for (const ScenarioReport& r : reports) {
    out << r.scenario_id << "  " << share(r.rank_share[0]) << "  " << share(r.rank_share[1]) << "  "
        << format_number(r.tuition.back()) << "  " << format_number(r.debt.back()) << "  "
        << format_number(r.expenditure_per_student.back()) << '\n';
  }
  for (const MetricOrdering& m : orderings) {
    out << to_string(m.metric) << " at horizon:";
    for (std::size_t k = 0; k < m.ranking.size(); ++k) out << (k ? " > " : " ") << m.ranking[k].first;
    if (m.violations.empty()) {
      out << "  [ok]\n";
    } else {
      out << "  [unexpected:";
      for (const auto& v : m.violations) out << ' ' << v << ';';
      out << "]\n";
    }
  }
}

void write_industry_csv(const std::vector<ScenarioReport>& reports, std::ostream& out) {
  out << "year";
  for (const ScenarioReport& r : reports) {
    out << ',' << r.scenario_id << "_tuition," << r.scenario_id << "_debt," << r.scenario_id
        << "_expenditure_per_student";
  }
  out << '\n';
  const std::size_t n = reports.empty() ? 0 : reports.front().tuition.size();
  for (std::size_t y = 0; y < n; ++y) {
    out << y;
    for (const ScenarioReport& r : reports) {
      out << ',' << format_number(r.tuition[y]) << ',' << format_number(r.debt[y]) << ','
          << format_number(r.expenditure_per_student[y]);
    }
    out << '\n';
  }
}

}  // namespace tuition
