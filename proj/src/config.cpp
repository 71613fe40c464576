#include "tuition/config.hpp"

#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "tuition/errors.hpp"
#include "tuition/parameters.hpp"

namespace tuition {

namespace {

using nlohmann::json;

struct StockSpec {
  std::string_view name;
  std::string_view unit;
  double CollegeState::*member;
};

// reference_price is derived from sticker_price at t = 0 and is not configurable.
constexpr StockSpec kStocks[] = {
    {"students", "students", &CollegeState::students},
    {"faculty", "faculty", &CollegeState::faculty},
    {"student_space", "ft^2", &CollegeState::student_space},
    {"planned_student_space", "ft^2", &CollegeState::planned_student_space},
    {"faculty_space", "ft^2", &CollegeState::faculty_space},
    {"planned_faculty_space", "ft^2", &CollegeState::planned_faculty_space},
    {"sticker_price", "$/student/year", &CollegeState::sticker_price},
    {"cash", "$", &CollegeState::cash},
    {"debt", "$", &CollegeState::debt},
    {"endowment", "$", &CollegeState::endowment},
    {"capital_fund", "$", &CollegeState::capital_fund},
    {"typical_net_price", "$/student/year", &CollegeState::typical_net_price},
    {"typical_aid", "$/student/year", &CollegeState::typical_aid},
    {"typical_admit_rate", "dimensionless", &CollegeState::typical_admit_rate},
    {"typical_yield", "dimensionless", &CollegeState::typical_yield},
    {"perceived_experience", "dimensionless", &CollegeState::perceived_experience},
};

struct TargetSpec {
  std::string_view name;
  std::string_view unit;
  double CalibrationTargets::*member;
};

constexpr TargetSpec kTargets[] = {
    {"students", "students", &CalibrationTargets::students},
    {"sticker_price", "$/student/year", &CalibrationTargets::sticker_price},
    {"endowment", "$", &CalibrationTargets::endowment},
    {"cash", "$", &CalibrationTargets::cash},
    {"debt", "$", &CalibrationTargets::debt},
    {"typical_yield", "dimensionless", &CalibrationTargets::typical_yield},
};

const char* kCollegeNames[] = {"A", "B"};

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

const json& require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  return j;
}

void reject_unknown(const json& j, const std::string& path, std::initializer_list<std::string_view> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (std::string_view a : allowed) known = known || it.key() == a;
    if (!known) throw ConfigError(join(path, it.key()), "unknown key");
  }
}

double quantity(const json& j, const std::string& path, std::string_view unit) {
  if (!j.is_object()) throw ConfigError(path, "expected {\"value\": ..., \"unit\": \"" + std::string(unit) + "\"}");
  reject_unknown(j, path, {"value", "unit"});
  if (!j.contains("value") || !j["value"].is_number()) throw ConfigError(path + ".value", "expected a number");
  if (!j.contains("unit") || !j["unit"].is_string()) {
    throw ConfigError(path + ".unit", "missing unit, expected \"" + std::string(unit) + "\"");
  }
  const std::string found = j["unit"].get<std::string>();
  if (found != unit) {
    throw ConfigError(path, "unit mismatch: expected \"" + std::string(unit) + "\", found \"" + found + "\"");
  }
  return j["value"].get<double>();
}

json quantity_doc(double value, std::string_view unit) { return json{{"value", value}, {"unit", unit}}; }

template <typename T>
T scalar(const json& j, const std::string& path) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ConfigError(path, "wrong value type");
  }
}

LookupTable parse_table(const json& j, const std::string& path, LookupTable table) {
  require_object(j, path);
  reject_unknown(j, path, {"direction", "range", "points"});
  if (j.contains("direction")) {
    const auto d = scalar<std::string>(j["direction"], path + ".direction");
    if (d == "increasing") table.direction = Monotonicity::increasing;
    else if (d == "decreasing") table.direction = Monotonicity::decreasing;
    else throw ConfigError(path + ".direction", "expected \"increasing\" or \"decreasing\"");
  }
  if (j.contains("range")) {
    const json& r = require_object(j["range"], path + ".range");
    reject_unknown(r, path + ".range", {"lower", "upper", "lower_inclusive"});
    if (r.contains("lower")) table.range.lower = scalar<double>(r["lower"], path + ".range.lower");
    if (r.contains("upper")) table.range.upper = scalar<double>(r["upper"], path + ".range.upper");
    if (r.contains("lower_inclusive")) {
      table.range.lower_inclusive = scalar<bool>(r["lower_inclusive"], path + ".range.lower_inclusive");
    }
  }
  if (j.contains("points")) {
    const json& pts = j["points"];
    if (!pts.is_array()) throw ConfigError(path + ".points", "expected an array of [x, y] pairs");
    table.points.clear();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const std::string ip = path + ".points[" + std::to_string(i) + "]";
      if (!pts[i].is_array() || pts[i].size() != 2) throw ConfigError(ip, "expected [x, y]");
      table.points.push_back({scalar<double>(pts[i][0], ip), scalar<double>(pts[i][1], ip)});
    }
  }
  if (auto err = validate_table(table)) throw ConfigError(path, err->message);
  return table;
}

json table_doc(const LookupTable& t) {
  json pts = json::array();
  for (const auto& p : t.points) pts.push_back({p.x, p.y});
  return json{{"direction", to_string(t.direction)},
              {"range", {{"lower", t.range.lower}, {"upper", t.range.upper}, {"lower_inclusive", t.range.lower_inclusive}}},
              {"points", pts}};
}

void parse_params(const json& j, const std::string& path, CollegeParams& p) {
  require_object(j, path);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = join(path, it.key());
    const ParamSpec* spec = find_param(it.key());
    if (!spec) throw ConfigError(key, "unknown key");
    const double v = quantity(it.value(), key, spec->unit);
    const std::string msg = check_bounds(*spec, v);
    if (!msg.empty()) throw ConfigError(key, msg);
    p.*spec->member = v;
  }
}

EventTarget parse_target(const std::string& s, const std::string& path) {
  if (s == "market") return EventTarget::market;
  if (s == "A") return EventTarget::college_a;
  if (s == "B") return EventTarget::college_b;
  throw ConfigError(path, "expected \"market\", \"A\" or \"B\"");
}

EventAction parse_action(const std::string& s, const std::string& path) {
  for (EventAction a : {EventAction::enable_rankings, EventAction::disable_rankings, EventAction::stop_matching,
                        EventAction::set_parameter, EventAction::add_capital_gift}) {
    if (s == to_string(a)) return a;
  }
  throw ConfigError(path, "unknown action '" + s + "'");
}

ScenarioEvent parse_event(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"time", "target", "action", "parameter", "value"});
  ScenarioEvent e;
  if (!j.contains("time") || !j.contains("target") || !j.contains("action")) {
    throw ConfigError(path, "events need time, target and action");
  }
  e.time = quantity(j["time"], path + ".time", "years");
  e.target = parse_target(scalar<std::string>(j["target"], path + ".target"), path + ".target");
  e.action = parse_action(scalar<std::string>(j["action"], path + ".action"), path + ".action");
  if (e.action == EventAction::set_parameter) {
    if (!j.contains("parameter")) throw ConfigError(path + ".parameter", "required for set_parameter");
    e.parameter = scalar<std::string>(j["parameter"], path + ".parameter");
    const ParamSpec* spec = find_param(e.parameter);
    if (!spec) throw ConfigError(path + ".parameter", "unknown parameter '" + e.parameter + "'");
    if (!j.contains("value")) throw ConfigError(path + ".value", "required for set_parameter");
    e.value = quantity(j["value"], path + ".value", spec->unit);
  } else if (e.action == EventAction::add_capital_gift) {
    if (!j.contains("value")) throw ConfigError(path + ".value", "required for add_capital_gift");
    e.value = quantity(j["value"], path + ".value", "$");
  } else if (j.contains("parameter") || j.contains("value")) {
    throw ConfigError(path, std::string(to_string(e.action)) + " takes no parameter or value");
  }
  return e;
}

json event_doc(const ScenarioEvent& e) {
  json j{{"time", quantity_doc(e.time, "years")}, {"target", to_string(e.target)}, {"action", to_string(e.action)}};
  if (e.action == EventAction::set_parameter) {
    j["parameter"] = e.parameter;
    const ParamSpec* spec = find_param(e.parameter);
    j["value"] = quantity_doc(e.value, spec ? spec->unit : "dimensionless");
  } else if (e.action == EventAction::add_capital_gift) {
    j["value"] = quantity_doc(e.value, "$");
  }
  return j;
}

CollegeParams default_params(int college) {
  CollegeParams p;
  if (college == 0) p.satisfaction_bias = kDefaultSatisfactionEdge;
  return p;
}

}  // namespace

SimConfig default_config(CalibrationMode mode, const CalibrationTargets& targets) {
  SimConfig c;
  for (int i = 0; i < 2; ++i) {
    c.colleges[i] = default_params(i);
    CalibrationTargets t = targets;
    t.applications = c.applicant_pool / 2.0;
    c.initial[i] = calibrate_steady_state(c.colleges[i], t, mode).state;
  }
  return c;
}

LoadedConfig load_config_text(std::string_view text) {
  json doc;
  try {
    doc = text.find_first_not_of(" \t\r\n") == std::string_view::npos ? json::object() : json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("invalid JSON: ") + e.what());
  }
  require_object(doc, "<document>");
  reject_unknown(doc, "", {"simulation", "market", "calibration", "college", "scenario", "output"});

  LoadedConfig out;
  SimConfig& c = out.sim;

  if (doc.contains("simulation")) {
    const json& s = require_object(doc["simulation"], "simulation");
    reject_unknown(s, "simulation", {"dt", "horizon"});
    if (s.contains("dt")) c.dt = quantity(s["dt"], "simulation.dt", "years");
    if (s.contains("horizon")) c.horizon = quantity(s["horizon"], "simulation.horizon", "years");
  }

  if (doc.contains("market")) {
    const json& m = require_object(doc["market"], "market");
    reject_unknown(m, "market", {"applicant_pool", "weights", "ranking_lag_years", "competition_enabled_at"});
    if (m.contains("applicant_pool")) {
      c.applicant_pool = quantity(m["applicant_pool"], "market.applicant_pool", "students/year");
    }
    if (m.contains("weights")) {
      const json& w = require_object(m["weights"], "market.weights");
      reject_unknown(w, "market.weights", {"reputation", "expenditure", "facilities"});
      if (w.contains("reputation")) {
        c.weights.reputation = quantity(w["reputation"], "market.weights.reputation", "dimensionless");
      }
      if (w.contains("expenditure")) {
        c.weights.expenditure = quantity(w["expenditure"], "market.weights.expenditure", "dimensionless");
      }
      if (w.contains("facilities")) {
        c.weights.facilities = quantity(w["facilities"], "market.weights.facilities", "dimensionless");
      }
    }
    if (m.contains("ranking_lag_years")) {
      const double lag = quantity(m["ranking_lag_years"], "market.ranking_lag_years", "years");
      if (lag != 0.0 && lag != 1.0) throw ConfigError("market.ranking_lag_years", "must be 0 or 1");
      c.ranking_lag_years = static_cast<int>(lag);
    }
    if (m.contains("competition_enabled_at")) {
      c.competition_enabled_at = quantity(m["competition_enabled_at"], "market.competition_enabled_at", "years");
    }
  }

  if (doc.contains("calibration")) {
    const json& k = require_object(doc["calibration"], "calibration");
    reject_unknown(k, "calibration",
                   {"mode", "students", "sticker_price", "endowment", "cash", "debt", "typical_yield"});
    if (k.contains("mode")) {
      const auto mode = scalar<std::string>(k["mode"], "calibration.mode");
      if (mode == "solve") out.mode = CalibrationMode::solve;
      else if (mode == "nominal") out.mode = CalibrationMode::nominal;
      else throw ConfigError("calibration.mode", "expected \"solve\" or \"nominal\"");
    }
    for (const TargetSpec& t : kTargets) {
      const std::string key(t.name);
      if (k.contains(key)) out.targets.*t.member = quantity(k[key], "calibration." + key, t.unit);
    }
  }
  out.targets.applications = c.applicant_pool / 2.0;

  const json none = json::object();
  const json* colleges = &none;
  if (doc.contains("college")) {
    colleges = &require_object(doc["college"], "college");
    reject_unknown(*colleges, "college", {"A", "B"});
  }
  for (int i = 0; i < 2; ++i) {
    const std::string path = std::string("college.") + kCollegeNames[i];
    const json& cj = colleges->contains(kCollegeNames[i]) ? require_object((*colleges)[kCollegeNames[i]], path) : none;
    reject_unknown(cj, path, {"params", "yield_form", "matches_competitor", "tables", "init"});
    CollegeParams p = default_params(i);
    if (cj.contains("params")) parse_params(cj["params"], path + ".params", p);
    if (cj.contains("yield_form")) {
      const auto f = scalar<std::string>(cj["yield_form"], path + ".yield_form");
      if (f == "elasticity") p.yield_form = YieldForm::elasticity;
      else if (f == "literal") p.yield_form = YieldForm::literal;
      else throw ConfigError(path + ".yield_form", "expected \"elasticity\" or \"literal\"");
    }
    if (cj.contains("matches_competitor")) {
      p.matches_competitor = scalar<bool>(cj["matches_competitor"], path + ".matches_competitor");
    }
    if (cj.contains("tables")) {
      const json& t = require_object(cj["tables"], path + ".tables");
      reject_unknown(t, path + ".tables", {"satisfaction", "experience"});
      if (t.contains("satisfaction")) {
        p.satisfaction = parse_table(t["satisfaction"], path + ".tables.satisfaction", p.satisfaction);
      }
      if (t.contains("experience")) {
        p.experience = parse_table(t["experience"], path + ".tables.experience", p.experience);
      }
    }
    c.colleges[i] = p;

    const json& init = cj.contains("init") ? require_object(cj["init"], path + ".init") : none;
    for (auto it = init.begin(); it != init.end(); ++it) {
      bool known = false;
      for (const StockSpec& s : kStocks) known = known || it.key() == s.name;
      if (!known) throw ConfigError(path + ".init." + it.key(), "unknown key");
    }
    bool complete = true;
    for (const StockSpec& s : kStocks) complete = complete && init.contains(std::string(s.name));
    CollegeState st;
    if (!complete) {
      CalibrationReport rep = calibrate_steady_state(p, out.targets, out.mode);
      st = rep.state;
      out.calibration[i] = std::move(rep);
    }
    for (const StockSpec& s : kStocks) {
      const std::string key(s.name);
      if (init.contains(key)) st.*s.member = quantity(init[key], path + ".init." + key, s.unit);
    }
    st.reference_price = st.sticker_price;
    c.initial[i] = st;
  }

  if (doc.contains("scenario")) {
    const json& s = require_object(doc["scenario"], "scenario");
    reject_unknown(s, "scenario", {"id", "label", "events"});
    if (s.contains("id") && s.contains("events")) {
      throw ConfigError("scenario", "give either an id or an explicit event list, not both");
    }
    if (s.contains("id")) {
      const auto id = scalar<std::string>(s["id"], "scenario.id");
      out.scenario = parse_scenario(id);
      if (!out.scenario) throw ConfigError("scenario.id", "expected S1..S5, got '" + id + "'");
      c = build_scenario(*out.scenario, c);
    }
    if (s.contains("events")) {
      const json& ev = s["events"];
      if (!ev.is_array()) throw ConfigError("scenario.events", "expected an array");
      for (std::size_t n = 0; n < ev.size(); ++n) {
        c.events.push_back(parse_event(ev[n], "scenario.events[" + std::to_string(n) + "]"));
      }
    }
    if (s.contains("label")) c.scenario_id = scalar<std::string>(s["label"], "scenario.label");
  }

  if (doc.contains("output")) {
    const json& o = require_object(doc["output"], "output");
    reject_unknown(o, "output", {"dir", "formats"});
    if (o.contains("dir")) out.output.dir = scalar<std::string>(o["dir"], "output.dir");
    if (o.contains("formats")) {
      if (!o["formats"].is_array()) throw ConfigError("output.formats", "expected an array");
      out.output.csv = out.output.json = false;
      for (const json& f : o["formats"]) {
        const auto name = scalar<std::string>(f, "output.formats");
        if (name == "csv") out.output.csv = true;
        else if (name == "json") out.output.json = true;
        else throw ConfigError("output.formats", "unknown format '" + name + "'");
      }
    }
  }

  validate_config(c);
  return out;
}

LoadedConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_config_text(ss.str());
}

std::filesystem::path resolve_config_path(const std::string& name) {
  namespace fs = std::filesystem;
  const fs::path p(name);
  if (p.is_absolute() || fs::exists(p)) return p;
  if (const char* dir = std::getenv("TUITION_DYN_SEED_DIR"); dir && *dir) {
    const fs::path candidate = fs::path(dir) / p;
    if (fs::exists(candidate)) return candidate;
  }
  const fs::path fallback = fs::path("configs") / p;
  if (fs::exists(fallback)) return fallback;
  return p;
}

std::string to_document(const LoadedConfig& lc) {
  const SimConfig& c = lc.sim;
  json doc;
  doc["simulation"] = {{"dt", quantity_doc(c.dt, "years")}, {"horizon", quantity_doc(c.horizon, "years")}};
  json market{{"applicant_pool", quantity_doc(c.applicant_pool, "students/year")},
              {"weights",
               {{"reputation", quantity_doc(c.weights.reputation, "dimensionless")},
                {"expenditure", quantity_doc(c.weights.expenditure, "dimensionless")},
                {"facilities", quantity_doc(c.weights.facilities, "dimensionless")}}},
              {"ranking_lag_years", quantity_doc(c.ranking_lag_years, "years")}};
  if (c.competition_enabled_at) {
    market["competition_enabled_at"] = quantity_doc(*c.competition_enabled_at, "years");
  }
  doc["market"] = market;
  json cal{{"mode", to_string(lc.mode)}};
  for (const TargetSpec& t : kTargets) cal[std::string(t.name)] = quantity_doc(lc.targets.*t.member, t.unit);
  doc["calibration"] = cal;
  for (int i = 0; i < 2; ++i) {
    const CollegeParams& p = c.colleges[i];
    json params = json::object();
    for (const ParamSpec& s : college_param_specs()) params[std::string(s.name)] = quantity_doc(p.*s.member, s.unit);
    json init = json::object();
    for (const StockSpec& s : kStocks) init[std::string(s.name)] = quantity_doc(c.initial[i].*s.member, s.unit);
    doc["college"][kCollegeNames[i]] = {
        {"params", params},
        {"yield_form", p.yield_form == YieldForm::elasticity ? "elasticity" : "literal"},
        {"matches_competitor", p.matches_competitor},
        {"tables", {{"satisfaction", table_doc(p.satisfaction)}, {"experience", table_doc(p.experience)}}},
        {"init", init}};
  }
  json events = json::array();
  for (const ScenarioEvent& e : c.events) events.push_back(event_doc(e));
  doc["scenario"] = {{"label", c.scenario_id}, {"events", events}};
  json formats = json::array();
  if (lc.output.csv) formats.push_back("csv");
  if (lc.output.json) formats.push_back("json");
  doc["output"] = {{"dir", lc.output.dir}, {"formats", formats}};
  return doc.dump(2);
}

}  // namespace tuition
