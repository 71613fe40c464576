// Prints one PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "criteria.hpp"
#include "oracle.hpp"
#include "tuition/calibration.hpp"
#include "tuition/output.hpp"

using namespace acceptance;

namespace {

std::array<double, 16> stocks(const CollegeState& s) {
  return {s.students,      s.faculty,           s.student_space,       s.planned_student_space,
          s.faculty_space, s.planned_faculty_space, s.sticker_price,   s.cash,
          s.debt,          s.endowment,         s.capital_fund,        s.typical_net_price,
          s.typical_aid,   s.typical_admit_rate, s.typical_yield,      s.perceived_experience};
}

// Scale for a relative comparison: a stock's own size, or for stocks that start
// at zero the size of the quantity they accumulate or feed.
std::array<double, 16> scales(const CollegeState& s0, double expenditures) {
  auto st = stocks(s0);
  std::array<double, 16> out{};
  for (std::size_t k = 0; k < st.size(); ++k) out[k] = std::abs(st[k]);
  out[3] = std::max(out[3], s0.student_space);
  out[5] = std::max(out[5], s0.faculty_space);
  for (std::size_t k : {7u, 8u, 9u, 10u}) out[k] = std::max(out[k], expenditures);
  return out;
}

// 1. Steady state holds with competition off.
Check steady_hold(const SimConfig& base) {
  SimConfig c = base;
  c.events.clear();
  c.competition_enabled_at.reset();
  const SystemState s0 = initial_system(c);
  std::array<std::array<double, 16>, 2> scale;
  for (int i = 0; i < 2; ++i) scale[i] = scales(s0.colleges[i], step(s0, c, c.dt).aux[i].expenditures);
  double worst = 0.0;
  run(c, [&](const SystemState& before, const StepOutput&) {
    for (int i = 0; i < 2; ++i) {
      const auto now = stocks(before.colleges[i]);
      const auto init = stocks(s0.colleges[i]);
      for (std::size_t k = 0; k < now.size(); ++k) worst = std::max(worst, std::abs(now[k] - init[k]) / scale[i][k]);
    }
  });
  return {"steady-state hold", worst <= 1e-3, "max relative drift " + fmt(worst)};
}

// 6. S4 beats S1 for College B at every construction cost.
Check s4_robust(const ScenarioSet& s, const SimConfig& base) {
  bool pass = true;
  std::string detail;
  for (double ck : {150.0, 300.0, 600.0}) {
    double b1 = 0, b4 = 0;
    bool ok;
    if (ck == base.colleges[1].construction_cost) {
      ok = s4_improves(s, &b1, &b4);
    } else {
      SimConfig c = base;
      for (auto& p : c.colleges) p.construction_cost = ck;
      ScenarioSet sub;
      sub.runs[ScenarioId::S1] = run(build_scenario(ScenarioId::S1, c));
      sub.runs[ScenarioId::S4] = run(build_scenario(ScenarioId::S4, c));
      ok = s4_improves(sub, &b1, &b4);
    }
    pass = pass && ok;
    detail += std::string(detail.empty() ? "" : "; ") + "c_K " + fmt(ck) + ": B " + fmt(100 * b1) + "% -> " +
              fmt(100 * b4) + "%";
  }
  return {"S4 edge improves B", pass, detail};
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), 1e-300); }

// 10. Accounting identities, conservation, dt convergence, determinism.
Check numerics(const SimConfig& base) {
  double worst_identity = 0.0;
  bool conserved = true;
  double worst_dt = 0.0;
  bool deterministic = true;
  for (ScenarioId id : kAllScenarios) {
    SimConfig c = build_scenario(id, base);
    const Trajectory coarse = run(c, [&](const SystemState& before, const StepOutput& out) {
      conserved = conserved && out.market.applications[0] + out.market.applications[1] == c.applicant_pool;
      for (int i = 0; i < 2; ++i) {
        const CollegeAux& a = out.aux[i];
        const CollegeParams& p = before.params[i];
        const double debt = before.colleges[i].debt;
        const double scale = a.expenditures;
        auto track = [&](double lhs, double rhs) { worst_identity = std::max(worst_identity, std::abs(lhs - rhs) / scale); };
        track(a.expenditures, a.faculty_cost + a.facilities_cost + a.debt_cost + a.aid_cost);
        track(a.debt_cost, debt / p.debt_term + p.debt_interest_rate * debt);
        track(a.revenue, a.tuition_revenue + a.cash_draw + a.endowment_draw + p.unrestricted_gifts);
        track(a.surplus, a.revenue - a.expenditures);
        track(a.gross_deficit, a.cash_draw + a.endowment_draw + a.operating_borrowing);
      }
    });
    SimConfig fine_cfg = c;
    fine_cfg.dt = c.dt / 2;
    const Trajectory fine = run(fine_cfg);
    for (std::size_t k = 0; k < coarse.samples.size(); ++k) {
      for (int i = 0; i < 2; ++i) {
        const auto a = stocks(coarse.samples[k].state[i]);
        const auto b = stocks(fine.samples[k].state[i]);
        const auto sc = scales(coarse.samples[0].state[i], coarse.samples[0].aux[i].expenditures);
        for (std::size_t v = 0; v < a.size(); ++v) worst_dt = std::max(worst_dt, std::abs(a[v] - b[v]) / sc[v]);
      }
    }
    std::ostringstream x, y;
    write_trajectory_csv(coarse, x);
    write_trajectory_csv(run(c), y);
    deterministic = deterministic && x.str() == y.str();
  }
  const bool pass = worst_identity <= 1e-9 && conserved && worst_dt < 0.01 && deterministic;
  return {"numerical properties", pass,
          "identity residual " + fmt(worst_identity) + ", pool conserved " + (conserved ? "yes" : "no") +
              ", dt-halving max change " + fmt(100 * worst_dt) + "%, byte-identical reruns " +
              (deterministic ? "yes" : "no")};
}

// 11. Engine step against the straight-line oracle on random states.
Check oracle_equivalence(const SimConfig& base) {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto around = [&](double v, double spread) { return v * (1.0 - spread + 2 * spread * u(rng)); };
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    SimConfig c = base;
    c.ranking_lag_years = u(rng) < 0.5 ? 0 : 1;
    const double wr = u(rng), we = u(rng) * (1 - wr);
    c.weights = {wr, we, 1 - wr - we};
    SystemState s = initial_system(c);
    s.step_index = u(rng) < 0.5 ? 8 * static_cast<long>(50 * u(rng)) : static_cast<long>(400 * u(rng));
    s.time = static_cast<double>(s.step_index) * c.dt;
    s.market.rankings_enabled = u(rng) < 0.7;
    const int pattern = static_cast<int>(3 * u(rng));
    s.market.ranks = pattern == 0 ? RankPair{1, 2} : pattern == 1 ? RankPair{2, 1} : RankPair{1, 1};
    const double split = around(0.5, 0.3);
    s.market.applications = {c.applicant_pool * split, c.applicant_pool * (1 - split)};
    s.market.has_lagged_inputs = u(rng) < 0.5;
    for (auto& l : s.market.lagged_inputs) l = {around(0.75, 0.2), around(30000, 0.3), around(100, 0.2)};
    for (int i = 0; i < 2; ++i) {
      CollegeParams& p = s.params[i];
      p.competitive_edge = 0.3 * u(rng);
      p.matches_competitor = u(rng) < 0.8;
      p.endowment_return = 0.04 * u(rng);
      p.unrestricted_gifts = u(rng) < 0.3 ? 1e6 * u(rng) : 0.0;
      CollegeState& st = s.colleges[i];
      st.students = around(st.students, 0.2);
      st.faculty = around(st.faculty, 0.2);
      st.student_space = around(st.student_space, 0.2);
      st.planned_student_space = u(rng) < 0.5 ? 0.0 : 20000 * u(rng);
      st.faculty_space = around(st.faculty_space, 0.2);
      st.planned_faculty_space = u(rng) < 0.5 ? 0.0 : 5000 * u(rng);
      st.sticker_price = around(st.sticker_price, 0.2);
      st.reference_price = around(st.sticker_price, 0.05);
      st.cash = u(rng) < 0.5 ? 0.0 : 5e6 * u(rng);
      st.debt = u(rng) < 0.3 ? 0.0 : 3e7 * u(rng);
      st.endowment = around(st.endowment, 0.5);
      st.capital_fund = u(rng) < 0.7 ? 0.0 : 5e7 * u(rng);
      st.typical_aid = around(st.typical_aid, 0.3);
      st.typical_net_price = around(st.sticker_price - st.typical_aid, 0.2);
      st.typical_admit_rate = around(0.3, 0.3);
      st.typical_yield = around(0.3, 0.3);
      st.perceived_experience = around(0.8, 0.2);
    }
    const SystemState engine = step(s, c, c.dt).next;
    const SystemState naive = oracle::step(s, c);
    for (int i = 0; i < 2; ++i) {
      const auto a = stocks(engine.colleges[i]);
      const auto b = stocks(naive.colleges[i]);
      const auto sc = scales(s.colleges[i], 1.0);
      for (std::size_t k = 0; k < a.size(); ++k) {
        const double denom = std::max({std::abs(a[k]), std::abs(b[k]), sc[k] * 1e-6, 1e-300});
        worst = std::max(worst, std::abs(a[k] - b[k]) / denom);
      }
      worst = std::max(worst, rel(engine.colleges[i].reference_price, naive.colleges[i].reference_price));
      worst = std::max(worst, rel(engine.market.applications[i], naive.market.applications[i]));
      if (engine.market.ranks[i] != naive.market.ranks[i]) worst = 1.0;
    }
  }
  return {"oracle equivalence", worst <= 1e-12, "100 random states, max relative difference " + fmt(worst)};
}

// 12. Infeasible literal facilities cost and clean default calibration.
Check calibration_diagnostics(const SimConfig& base) {
  CollegeParams literal = base.colleges[1];
  literal.facilities_operating_cost = 159.0;
  bool reported = false;
  double break_even = 0.0;
  try {
    calibrate_steady_state(literal, {});
  } catch (const CalibrationError& e) {
    break_even = e.break_even_zero_aid();
    reported = break_even > 0.0 && break_even < 159.0 && std::string(e.what()).find("break-even") != std::string::npos;
  }
  double worst = 0.0;
  for (const CollegeParams& p : base.colleges) worst = std::max(worst, calibrate_steady_state(p, {}).max_residual);
  return {"calibration diagnostics", reported && worst < 1e-9,
          std::string("c_B=159 ") + (reported ? "infeasible, break-even " + fmt(break_even, 5) + " $/ft^2/yr"
                                              : "not reported") +
              "; default max residual " + fmt(worst)};
}

}  // namespace

int main() {
  const SimConfig base = default_config();
  const ScenarioSet runs = run_all(base);
  const std::vector<Check> checks{steady_hold(base),        rank_shares_s1(runs),     tuition_pattern_s1(runs),
                                  s2_behaviour(runs),       s3_gift(runs),            s4_robust(runs, base),
                                  s5_campaign(runs),        industry_orderings(runs), discount_coupling(runs),
                                  numerics(base),           oracle_equivalence(base), calibration_diagnostics(base)};
  int failures = 0;
  for (std::size_t k = 0; k < checks.size(); ++k) {
    std::printf("%s %2zu %s: %s\n", checks[k].pass ? "PASS" : "FAIL", k + 1, checks[k].name.c_str(),
                checks[k].detail.c_str());
    failures += !checks[k].pass;
  }
  return failures;
}
