#include "tuition/scenarios.hpp"

#include <algorithm>
#include <stdexcept>

namespace tuition {

const char* to_string(ScenarioId id) {
  switch (id) {
    case ScenarioId::S1: return "S1";
    case ScenarioId::S2: return "S2";
    case ScenarioId::S3: return "S3";
    case ScenarioId::S4: return "S4";
    case ScenarioId::S5: return "S5";
  }
  return "?";
}

std::optional<ScenarioId> parse_scenario(std::string_view text) {
  for (ScenarioId id : kAllScenarios) {
    if (text == to_string(id)) return id;
  }
  return std::nullopt;
}

std::vector<ScenarioEvent> scenario_events(ScenarioId id, const ScenarioSettings& st) {
  const ScenarioEvent rankings{st.rankings_year, EventTarget::market, EventAction::enable_rankings, {}, 0.0};
  const ScenarioEvent stop{st.stop_matching_year, EventTarget::college_b, EventAction::stop_matching, {}, 0.0};
  const ScenarioEvent gift{st.gift_year, EventTarget::college_b, EventAction::add_capital_gift, {},
                           st.gift_amount};
  const ScenarioEvent edge{st.edge_year, EventTarget::college_b, EventAction::set_parameter, "competitive_edge",
                           st.aggressive_edge};
  switch (id) {
    case ScenarioId::S1: return {rankings};
    case ScenarioId::S2: return {rankings, stop};
    case ScenarioId::S3: return {rankings, gift};
    case ScenarioId::S4: return {rankings, edge};
    case ScenarioId::S5: return {rankings, gift, edge};
  }
  return {};
}

SimConfig build_scenario(ScenarioId id, const SimConfig& base, const ScenarioSettings& settings) {
  SimConfig c = base;
  c.events = scenario_events(id, settings);
  c.scenario_id = to_string(id);
  return c;
}

std::optional<double> fraction_top_ranked(const Trajectory& traj, CollegeId college) {
  const int i = static_cast<int>(college);
  int total = 0;
  int first = 0;
  for (const Sample& s : traj.samples) {
    if (!s.market.rankings_enabled || s.market.ranks[i] == 0) continue;
    ++total;
    if (s.market.ranks[i] == 1) ++first;
  }
  if (total == 0) return std::nullopt;
  return static_cast<double>(first) / total;
}

const char* to_string(IndustryVariable v) {
  switch (v) {
    case IndustryVariable::tuition: return "tuition";
    case IndustryVariable::debt: return "debt";
    case IndustryVariable::expenditure_per_student: return "expenditure_per_student";
  }
  return "?";
}

std::vector<double> industry_series(const Trajectory& traj, IndustryVariable v) {
  std::vector<double> out;
  out.reserve(traj.samples.size());
  for (const Sample& s : traj.samples) {
    auto value = [&](int i) {
      switch (v) {
        case IndustryVariable::tuition: return s.state[i].sticker_price;
        case IndustryVariable::debt: return s.state[i].debt;
        case IndustryVariable::expenditure_per_student: return s.aux[i].expenditure_per_student;
      }
      return 0.0;
    };
    out.push_back(0.5 * (value(0) + value(1)));
  }
  return out;
}

ScenarioReport make_report(const Trajectory& traj) {
  ScenarioReport r;
  r.scenario_id = traj.scenario_id;
  r.horizon = static_cast<int>(traj.samples.size());
  r.rank_share = {fraction_top_ranked(traj, CollegeId::A), fraction_top_ranked(traj, CollegeId::B)};
  r.tuition = industry_series(traj, IndustryVariable::tuition);
  r.debt = industry_series(traj, IndustryVariable::debt);
  r.expenditure_per_student = industry_series(traj, IndustryVariable::expenditure_per_student);
  for (const Sample& s : traj.samples) {
    for (int i = 0; i < 2; ++i) {
      r.discount_rate[i].push_back(s.aux[i].discount_rate);
      r.admit_rate[i].push_back(s.aux[i].admit_rate);
    }
  }
  return r;
}

std::vector<MetricOrdering> compare_scenarios(const std::vector<ScenarioReport>& reports) {
  for (const ScenarioReport& r : reports) {
    if (r.horizon != reports.front().horizon) {
      throw std::invalid_argument("cannot compare scenarios with different horizons (" +
                                  std::to_string(reports.front().horizon) + " vs " + std::to_string(r.horizon) +
                                  ")");
    }
    if (r.horizon == 0) throw std::invalid_argument("scenario " + r.scenario_id + " has no samples");
  }
  std::vector<MetricOrdering> out;
  for (IndustryVariable v :
       {IndustryVariable::tuition, IndustryVariable::debt, IndustryVariable::expenditure_per_student}) {
    MetricOrdering m{v, {}, {}};
    for (const ScenarioReport& r : reports) {
      const std::vector<double>& series = v == IndustryVariable::tuition ? r.tuition
                                          : v == IndustryVariable::debt  ? r.debt
                                                                         : r.expenditure_per_student;
      m.ranking.emplace_back(r.scenario_id, series.back());
    }
    std::stable_sort(m.ranking.begin(), m.ranking.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    auto find = [&](const char* id) {
      return std::find_if(m.ranking.begin(), m.ranking.end(), [&](const auto& e) { return e.first == id; });
    };
    const auto s2 = find("S2");
    const auto s5 = find("S5");
    if (s2 != m.ranking.end() && s5 != m.ranking.end()) {
      for (const auto& [id, value] : m.ranking) {
        if (id != "S2" && !(s2->second < value)) m.violations.push_back("S2 not strictly below " + id);
        if (id != "S5" && !(s5->second > value)) m.violations.push_back("S5 not strictly above " + id);
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace tuition
