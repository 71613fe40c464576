#include "tuition/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "tuition/errors.hpp"
#include "tuition/parameters.hpp"

namespace tuition {

namespace {

long steps_per_year(double dt) { return std::lround(1.0 / dt); }

std::string college_key(int i) { return i == 0 ? "college.A" : "college.B"; }

int college_index(EventTarget t) { return t == EventTarget::college_a ? 0 : 1; }

void validate_params(const CollegeParams& p, const std::string& prefix) {
  for (const ParamSpec& spec : college_param_specs()) {
    const std::string msg = check_bounds(spec, p.*spec.member);
    if (!msg.empty()) throw ConfigError(prefix + ".params." + std::string(spec.name), msg);
  }
  if (auto err = validate_table(p.satisfaction)) {
    throw ConfigError(prefix + ".tables.satisfaction", err->message);
  }
  if (auto err = validate_table(p.experience)) {
    throw ConfigError(prefix + ".tables.experience", err->message);
  }
}

void validate_initial(const CollegeState& s, const std::string& prefix) {
  auto positive = [&](double v, const char* name) {
    if (!(v > 0.0)) throw ConfigError(prefix + ".init." + name, "must be > 0");
  };
  auto non_negative = [&](double v, const char* name) {
    if (!(v >= 0.0)) throw ConfigError(prefix + ".init." + name, "must be >= 0");
  };
  positive(s.students, "students");
  positive(s.faculty, "faculty");
  positive(s.student_space, "student_space");
  positive(s.faculty_space, "faculty_space");
  positive(s.sticker_price, "sticker_price");
  positive(s.typical_net_price, "typical_net_price");
  positive(s.typical_admit_rate, "typical_admit_rate");
  positive(s.typical_yield, "typical_yield");
  positive(s.perceived_experience, "perceived_experience");
  non_negative(s.planned_student_space, "planned_student_space");
  non_negative(s.planned_faculty_space, "planned_faculty_space");
  non_negative(s.cash, "cash");
  non_negative(s.debt, "debt");
  non_negative(s.endowment, "endowment");
  non_negative(s.capital_fund, "capital_fund");
}

void validate_event(const ScenarioEvent& e, std::size_t n) {
  const std::string key = "scenario.events[" + std::to_string(n) + "]";
  if (!(e.time >= 0.0)) throw ConfigError(key + ".time", "must be >= 0");
  const bool market_action =
      e.action == EventAction::enable_rankings || e.action == EventAction::disable_rankings;
  if (market_action != (e.target == EventTarget::market)) {
    throw ConfigError(key + ".target",
                      std::string("action ") + to_string(e.action) + " cannot target " + to_string(e.target));
  }
  if (e.action == EventAction::set_parameter) {
    const ParamSpec* spec = find_param(e.parameter);
    if (!spec) throw ConfigError(key + ".parameter", "unknown parameter '" + e.parameter + "'");
    const std::string msg = check_bounds(*spec, e.value);
    if (!msg.empty()) throw ConfigError(key + ".value", msg);
  }
  if (e.action == EventAction::add_capital_gift && !(e.value >= 0.0)) {
    throw ConfigError(key + ".value", "capital gift must be >= 0");
  }
}

RankingInputs report(const CollegeAux& a) {
  return {a.reputation, a.expenditure_per_student, a.space_per_student};
}

std::array<CollegeAux, 2> evaluate_pair(const SystemState& s, const MarketState& market, double dt,
                                        std::array<CollegeRates, 2>* rates) {
  std::array<CollegeAux, 2> aux{};
  for (int i = 0; i < 2; ++i) {
    const CollegeState& other = s.colleges[1 - i];
    CollegeInputs in;
    in.applications = market.applications[i];
    in.competitor_space_per_student = other.students > 0.0 ? other.student_space / other.students : 0.0;
    in.positional = market.rankings_enabled && s.params[i].matches_competitor;
    in.dt = dt;
    CollegeEvaluation ev = evaluate_college(s.params[i], s.colleges[i], in);
    aux[i] = ev.aux;
    if (rates) (*rates)[i] = ev.rates;
  }
  return aux;
}

class Fnv1a {
 public:
  void bytes(const void* p, std::size_t n) {
    const auto* c = static_cast<const unsigned char*>(p);
    for (std::size_t i = 0; i < n; ++i) {
      h_ ^= c[i];
      h_ *= 1099511628211ULL;
    }
  }
  void num(double v) { bytes(&v, sizeof v); }
  void integer(long v) { bytes(&v, sizeof v); }
  void text(const std::string& s) {
    integer(static_cast<long>(s.size()));
    bytes(s.data(), s.size());
  }
  void table(const LookupTable& t) {
    integer(static_cast<long>(t.direction));
    num(t.range.lower);
    num(t.range.upper);
    integer(t.range.lower_inclusive);
    integer(static_cast<long>(t.points.size()));
    for (const auto& p : t.points) {
      num(p.x);
      num(p.y);
    }
  }
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 14695981039346656037ULL;
};

}  // namespace

void validate_config(const SimConfig& c) {
  if (!(c.dt > 0.0 && c.dt <= 0.5)) throw ConfigError("simulation.dt", "dt ∈ (0,0.5]");
  const double per_year = 1.0 / c.dt;
  if (std::abs(per_year - std::round(per_year)) > 1e-9) {
    throw ConfigError("simulation.dt", "1/dt must be a whole number of steps per year");
  }
  if (!(c.horizon >= 1.0) || std::abs(c.horizon - std::round(c.horizon)) > 1e-12) {
    throw ConfigError("simulation.horizon", "horizon must be a whole number of years >= 1");
  }
  if (!(c.applicant_pool > 0.0)) throw ConfigError("market.applicant_pool", "must be > 0");
  const RankingWeights& w = c.weights;
  if (!(w.reputation >= 0.0 && w.expenditure >= 0.0 && w.facilities >= 0.0)) {
    throw ConfigError("market.weights", "each weight must be >= 0");
  }
  if (std::abs(w.reputation + w.expenditure + w.facilities - 1.0) > 1e-9) {
    throw ConfigError("market.weights", "weights must sum to 1");
  }
  if (c.ranking_lag_years != 0 && c.ranking_lag_years != 1) {
    throw ConfigError("market.ranking_lag_years", "must be 0 or 1");
  }
  for (int i = 0; i < 2; ++i) {
    validate_params(c.colleges[i], college_key(i));
    validate_initial(c.initial[i], college_key(i));
  }
  double latest = c.competition_enabled_at.value_or(0.0);
  if (c.competition_enabled_at && !(*c.competition_enabled_at >= 0.0)) {
    throw ConfigError("market.competition_enabled_at", "must be >= 0");
  }
  for (std::size_t n = 0; n < c.events.size(); ++n) {
    validate_event(c.events[n], n);
    latest = std::max(latest, c.events[n].time);
  }
  if (c.horizon < latest) throw ConfigError("simulation.horizon", "horizon is earlier than the last event");
}

SystemState initial_system(const SimConfig& c) {
  SystemState s;
  s.params = c.colleges;
  s.colleges = c.initial;
  for (auto& col : s.colleges) col.reference_price = col.sticker_price;
  s.market.applications = {c.applicant_pool / 2.0, c.applicant_pool / 2.0};
  return s;
}

StepOutput step(const SystemState& state, const SimConfig& config, double dt) {
  StepOutput out;
  SystemState cur = state;
  out.annual = state.step_index % steps_per_year(dt) == 0;
  try {
    if (out.annual) {
      for (auto& col : cur.colleges) col.reference_price = col.sticker_price;
      MarketState& m = cur.market;
      if (m.rankings_enabled) {
        const auto reported = evaluate_pair(cur, m, dt, nullptr);
        const std::array<RankingInputs, 2> now{report(reported[0]), report(reported[1])};
        const auto& used = (config.ranking_lag_years == 1 && m.has_lagged_inputs) ? m.lagged_inputs : now;
        m.index = ranking_index(used[0], used[1], config.weights);
        m.ranks = assign_ranks(m.index[0], m.index[1]);
        m.applications = allocate_applications(config.applicant_pool, m.ranks);
        m.lagged_inputs = now;
        m.has_lagged_inputs = true;
      } else {
        m.index = {0.5, 0.5};
        m.ranks = {0, 0};
        m.applications = {config.applicant_pool / 2.0, config.applicant_pool / 2.0};
      }
    }
    std::array<CollegeRates, 2> rates{};
    out.aux = evaluate_pair(cur, cur.market, dt, &rates);
    out.market = cur.market;
    out.next = cur;
    for (int i = 0; i < 2; ++i) out.next.colleges[i] = advance(cur.colleges[i], rates[i], dt);
    out.next.step_index = state.step_index + 1;
    out.next.time = static_cast<double>(out.next.step_index) * dt;
  } catch (const SimulationError& e) {
    if (e.time() >= 0.0) throw;
    throw SimulationError(e.kind(), e.detail(), state.time);
  }
  return out;
}

void apply_events(SystemState& s, const std::vector<ScenarioEvent>& events, double from, double to) {
  for (const ScenarioEvent& e : events) {
    if (!(e.time >= from && e.time < to)) continue;
    switch (e.action) {
      case EventAction::enable_rankings:
        s.market.rankings_enabled = true;
        break;
      case EventAction::disable_rankings:
        s.market.rankings_enabled = false;
        break;
      case EventAction::stop_matching:
        s.params[college_index(e.target)].matches_competitor = false;
        break;
      case EventAction::set_parameter: {
        const ParamSpec* spec = find_param(e.parameter);
        if (!spec) throw ConfigError("scenario.events", "unknown parameter '" + e.parameter + "'");
        s.params[college_index(e.target)].*spec->member = e.value;
        break;
      }
      case EventAction::add_capital_gift:
        s.colleges[college_index(e.target)].capital_fund += e.value;
        break;
    }
  }
}

Trajectory run(const SimConfig& config, const StepObserver& observer) {
  validate_config(config);
  std::vector<ScenarioEvent> events = config.events;
  if (config.competition_enabled_at) {
    events.insert(events.begin(),
                  ScenarioEvent{*config.competition_enabled_at, EventTarget::market, EventAction::enable_rankings,
                                {}, 0.0});
  }
  Trajectory traj;
  traj.scenario_id = config.scenario_id;
  traj.dt = config.dt;
  traj.config_hash = config_hash(config);

  const long per_year = steps_per_year(config.dt);
  const long total = std::lround(config.horizon) * per_year;
  traj.samples.reserve(static_cast<std::size_t>(std::lround(config.horizon)));
  SystemState s = initial_system(config);
  for (long n = 0; n < total; ++n) {
    const double t = static_cast<double>(n) * config.dt;
    apply_events(s, events, t, static_cast<double>(n + 1) * config.dt);
    if (s.market.rankings_enabled && !traj.rankings_start) traj.rankings_start = t;
    StepOutput out = step(s, config, config.dt);
    if (out.annual) {
      Sample smp;
      smp.year = static_cast<int>(n / per_year);
      for (int i = 0; i < 2; ++i) {
        smp.state[i] = s.colleges[i];
        smp.state[i].reference_price = s.colleges[i].sticker_price;
      }
      smp.aux = out.aux;
      smp.market = out.market;
      traj.samples.push_back(smp);
    }
    if (observer) observer(s, out);
    s = std::move(out.next);
  }
  return traj;
}

std::uint64_t config_hash(const SimConfig& c) {
  Fnv1a h;
  h.num(c.dt);
  h.num(c.horizon);
  h.num(c.applicant_pool);
  h.integer(c.ranking_lag_years);
  h.num(c.weights.reputation);
  h.num(c.weights.expenditure);
  h.num(c.weights.facilities);
  for (int i = 0; i < 2; ++i) {
    const CollegeParams& p = c.colleges[i];
    for (const ParamSpec& spec : college_param_specs()) h.num(p.*spec.member);
    h.integer(static_cast<long>(p.yield_form));
    h.integer(p.matches_competitor);
    h.table(p.satisfaction);
    h.table(p.experience);
    const CollegeState& s = c.initial[i];
    for (double v : {s.students, s.faculty, s.student_space, s.planned_student_space, s.faculty_space,
                     s.planned_faculty_space, s.sticker_price, s.reference_price, s.cash, s.debt, s.endowment,
                     s.capital_fund, s.typical_net_price, s.typical_aid, s.typical_admit_rate, s.typical_yield,
                     s.perceived_experience}) {
      h.num(v);
    }
  }
  h.integer(c.competition_enabled_at.has_value());
  h.num(c.competition_enabled_at.value_or(0.0));
  h.integer(static_cast<long>(c.events.size()));
  for (const ScenarioEvent& e : c.events) {
    h.num(e.time);
    h.integer(static_cast<long>(e.target));
    h.integer(static_cast<long>(e.action));
    h.text(e.parameter);
    h.num(e.value);
  }
  h.text(c.scenario_id);
  return h.value();
}

const char* to_string(CollegeId id) { return id == CollegeId::A ? "A" : "B"; }

const char* to_string(EventTarget t) {
  switch (t) {
    case EventTarget::market: return "market";
    case EventTarget::college_a: return "A";
    case EventTarget::college_b: return "B";
  }
  return "?";
}

const char* to_string(EventAction a) {
  switch (a) {
    case EventAction::enable_rankings: return "enable_rankings";
    case EventAction::disable_rankings: return "disable_rankings";
    case EventAction::stop_matching: return "stop_matching";
    case EventAction::set_parameter: return "set_parameter";
    case EventAction::add_capital_gift: return "add_capital_gift";
  }
  return "?";
}

}  // namespace tuition
