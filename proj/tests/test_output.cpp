#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "helpers.hpp"
#include "tuition/output.hpp"

using namespace tuition;
using doctest::Approx;
using testing_support::base_config;

namespace {

const Trajectory& s1_run() {
  static const Trajectory t = run(build_scenario(ScenarioId::S1, base_config()));
  return t;
}

std::size_t column(const std::string& name) {
  const auto& cols = trajectory_columns();
  for (std::size_t i = 2; i < cols.size(); ++i) {
    if (cols[i] == name) return i - 2;
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_SUITE("output") {

TEST_CASE("number formatting") {
  CHECK(format_number(31187.0) == "31187");
  CHECK(format_number(0.125) == "0.125");
  CHECK(format_number(1.0 / 3) == "0.333333");
  CHECK(format_number(50e6) == "5e+07");
}

TEST_CASE("column schema") {
  const auto& cols = trajectory_columns();
  CHECK(cols.size() == 24);
  CHECK(cols[0] == "year");
  CHECK(cols[1] == "college");
  CHECK(cols.back() == "expenditure_per_student");
}

TEST_CASE("csv layout and parse back") {
  std::ostringstream os;
  write_trajectory_csv(s1_run(), os);
  const std::string text = os.str();
  CHECK(text.rfind("# schema tuition-dyn/trajectory/1 scenario=S1 dt=0.125 config_hash=", 0) == 0);
  std::istringstream in(text);
  const auto rows = read_trajectory_csv(in);
  REQUIRE(rows.size() == 100);
  CHECK(rows[0].year == 0);
  CHECK(rows[0].college == "A");
  CHECK(rows[1].college == "B");
  CHECK(rows[99].year == 49);
  const auto& last = s1_run().samples.back();
  CHECK(rows[99].values[column("tuition")] == Approx(last.state[1].sticker_price).epsilon(1e-6));
  CHECK(rows[98].values[column("debt")] == Approx(last.state[0].debt).epsilon(1e-6));
  CHECK(rows[10].values[column("rank")] == static_cast<double>(s1_run().samples[5].market.ranks[0]));
}

TEST_CASE("csv reader rejects foreign files") {
  std::istringstream bad("a,b,c\n1,2,3\n");
  CHECK_THROWS(read_trajectory_csv(bad));
  std::ostringstream os;
  write_trajectory_csv(s1_run(), os);
  std::istringstream truncated(os.str().substr(0, os.str().size() - 20));
  CHECK_THROWS(read_trajectory_csv(truncated));
}

TEST_CASE("json carries the same values") {
  std::ostringstream os;
  write_trajectory_json(s1_run(), os);
  const auto doc = nlohmann::json::parse(os.str());
  CHECK(doc["metadata"]["schema"] == "tuition-dyn/trajectory/1");
  CHECK(doc["metadata"]["years"] == 50);
  CHECK(doc["colleges"]["A"]["tuition"].size() == 50);
  std::ostringstream csv;
  write_trajectory_csv(s1_run(), csv);
  std::istringstream in(csv.str());
  const auto rows = read_trajectory_csv(in);
  for (int y = 0; y < 50; ++y) {
    CHECK(doc["colleges"]["B"]["tuition"][y].get<double>() == rows[2 * y + 1].values[column("tuition")]);
  }
}

TEST_CASE("files on disk") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "tuition_out_test";
  fs::remove_all(dir);
  write_trajectory(s1_run(), dir, "S1", true, false);
  CHECK(fs::exists(dir / "S1.csv"));
  CHECK_FALSE(fs::exists(dir / "S1.json"));
  write_trajectory(s1_run(), dir, "S1", false, true);
  CHECK(fs::exists(dir / "S1.json"));
  fs::remove_all(dir);
  {
    std::ofstream(dir.string() + "_file") << "x";
  }
  CHECK_THROWS_AS(write_trajectory(s1_run(), dir.string() + "_file", "S1", true, false), std::runtime_error);
  fs::remove(dir.string() + "_file");
}

TEST_CASE("comparison and industry tables") {
  std::vector<ScenarioReport> reports{make_report(s1_run())};
  ScenarioReport r2 = reports[0];
  r2.scenario_id = "S2";
  reports.push_back(r2);
  std::ostringstream cmp;
  write_comparison(reports, compare_scenarios(reports), cmp);
  CHECK(cmp.str().find("tuition at horizon:") != std::string::npos);
  std::ostringstream ind;
  write_industry_csv(reports, ind);
  std::istringstream lines(ind.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "year,S1_tuition,S1_debt,S1_expenditure_per_student,S2_tuition,S2_debt,S2_expenditure_per_student");
  int n = 0;
  for (std::string l; std::getline(lines, l);) ++n;
  CHECK(n == 50);
}

}
