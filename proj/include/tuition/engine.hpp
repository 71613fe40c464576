#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tuition/market.hpp"
#include "tuition/model.hpp"

namespace tuition {

enum class CollegeId { A = 0, B = 1 };

enum class EventTarget { market, college_a, college_b };

enum class EventAction {
  enable_rankings,   // market
  disable_rankings,  // market
  stop_matching,     // college stops chasing the rival's facilities
  set_parameter,     // college parameter := value
  add_capital_gift   // college capital fund += value
};

struct ScenarioEvent {
  double time = 0.0;
  EventTarget target = EventTarget::market;
  EventAction action = EventAction::enable_rankings;
  std::string parameter;  // set_parameter only
  double value = 0.0;
  bool operator==(const ScenarioEvent&) const = default;
};

/// Shipped ranking weights. The expenditure criterion dominates; see README.
inline constexpr RankingWeights kDefaultWeights{0.08, 0.86, 0.06};

struct SimConfig {
  double dt = 0.125;     // years
  double horizon = 50.0; // years
  std::array<CollegeParams, 2> colleges{};
  std::array<CollegeState, 2> initial{};
  RankingWeights weights{kDefaultWeights};
  double applicant_pool = 20000.0;  // students/year
  int ranking_lag_years = 1;        // 0 or 1
  std::optional<double> competition_enabled_at;
  std::vector<ScenarioEvent> events;
  std::string scenario_id;
  bool operator==(const SimConfig&) const = default;
};

/// Everything that evolves during a run, including event-mutated parameters.
struct SystemState {
  long step_index = 0;
  double time = 0.0;
  std::array<CollegeParams, 2> params{};
  std::array<CollegeState, 2> colleges{};
  MarketState market{};
};

struct StepOutput {
  SystemState next;
  MarketState market;  // market in effect during the step
  std::array<CollegeAux, 2> aux{};
  bool annual = false;  // a ranking/fiscal-year boundary opened this step
};

struct Sample {
  int year = 0;
  std::array<CollegeState, 2> state{};
  std::array<CollegeAux, 2> aux{};
  MarketState market{};
};

struct Trajectory {
  std::vector<Sample> samples;  // one per year, taken at the start of the year
  std::string scenario_id;
  double dt = 0.0;
  std::uint64_t config_hash = 0;
  std::optional<double> rankings_start;  // first time rankings were enabled
};

/// Throws ConfigError naming the offending key.
void validate_config(const SimConfig& config);

/// Initial system at t = 0 with an equal application split.
SystemState initial_system(const SimConfig& config);

/// One explicit-Euler step: annual ranking and fiscal-year reset when the step
/// opens a year, college evaluation, stock update.
StepOutput step(const SystemState& state, const SimConfig& config, double dt);

/// Applies every event with time in [from, to).
void apply_events(SystemState& state, const std::vector<ScenarioEvent>& events, double from, double to);

using StepObserver = std::function<void(const SystemState& before, const StepOutput& out)>;

/// Runs the full horizon. Identical configs give bit-identical trajectories.
Trajectory run(const SimConfig& config, const StepObserver& observer = {});

std::uint64_t config_hash(const SimConfig& config);

const char* to_string(CollegeId id);
const char* to_string(EventTarget target);
const char* to_string(EventAction action);

}  // namespace tuition
