#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tuition/engine.hpp"

namespace tuition {

enum class ScenarioId { S1, S2, S3, S4, S5 };

inline constexpr std::array<ScenarioId, 5> kAllScenarios{ScenarioId::S1, ScenarioId::S2, ScenarioId::S3,
                                                         ScenarioId::S4, ScenarioId::S5};

/// Scenario timing and magnitudes.
struct ScenarioSettings {
  double rankings_year = 5.0;
  double stop_matching_year = 25.0;
  double gift_year = 20.0;
  double gift_amount = 50e6;  // $
  double edge_year = 25.0;
  double aggressive_edge = 0.20;
  bool operator==(const ScenarioSettings&) const = default;
};

const char* to_string(ScenarioId id);
std::optional<ScenarioId> parse_scenario(std::string_view text);

/// Events for one scenario; B is always the college that changes course.
std::vector<ScenarioEvent> scenario_events(ScenarioId id, const ScenarioSettings& settings = {});

/// `base` with its event list replaced by the scenario's.
SimConfig build_scenario(ScenarioId id, const SimConfig& base, const ScenarioSettings& settings = {});

/// Share of annual samples since rankings started in which the college ranked
/// first. Ties count for both. Empty when rankings never started.
std::optional<double> fraction_top_ranked(const Trajectory& traj, CollegeId college);

enum class IndustryVariable { tuition, debt, expenditure_per_student };
const char* to_string(IndustryVariable v);

/// Pointwise mean of the two colleges.
std::vector<double> industry_series(const Trajectory& traj, IndustryVariable variable);

struct ScenarioReport {
  std::string scenario_id;
  int horizon = 0;
  std::array<std::optional<double>, 2> rank_share{};
  std::vector<double> tuition;
  std::vector<double> debt;
  std::vector<double> expenditure_per_student;
  std::array<std::vector<double>, 2> discount_rate;
  std::array<std::vector<double>, 2> admit_rate;
};

ScenarioReport make_report(const Trajectory& traj);

struct MetricOrdering {
  IndustryVariable metric;
  // (scenario, horizon value), largest first
  std::vector<std::pair<std::string, double>> ranking;
  std::vector<std::string> violations;
};

/// Horizon orderings for tuition, debt and expenditure per student. When S2 and
/// S5 are both present, S2 is expected strictly lowest and S5 strictly highest.
/// Throws std::invalid_argument on mismatched horizons.
std::vector<MetricOrdering> compare_scenarios(const std::vector<ScenarioReport>& reports);

}  // namespace tuition
