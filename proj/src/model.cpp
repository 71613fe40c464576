#include "tuition/model.hpp"

#include <algorithm>
#include <cmath>

#include "tuition/errors.hpp"

namespace tuition {

const char* to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::college_collapse: return "college-collapse";
    case FailureKind::degenerate_market: return "degenerate-market";
    case FailureKind::pricing: return "pricing";
    case FailureKind::facilities: return "facilities";
    case FailureKind::lookup_range: return "lookup-range";
    case FailureKind::internal: return "internal";
  }
  return "unknown";
}

SimulationError::SimulationError(FailureKind kind, const std::string& what, double time)
    : std::runtime_error(std::string(to_string(kind)) + " error: " + what +
                         (time >= 0.0 ? " (t=" + std::to_string(time) + ")" : std::string())),
      kind_(kind),
      time_(time),
      detail_(what) {}

double desired_applications(double target_class, double typical_admit_rate, double typical_yield) {
  if (!(typical_admit_rate > 0.0) || !(typical_yield > 0.0)) {
    throw ConfigError("typical_admit_rate/typical_yield", "must be positive to size the application target");
  }
  return target_class / (typical_admit_rate * typical_yield);
}

Admission admit_students(double applications, double target_class, double typical_yield) {
  if (!(applications > 0.0)) {
    throw SimulationError(FailureKind::degenerate_market, "college received no applications");
  }
  const double target = target_class / typical_yield;
  const double admitted = std::min(target, applications);
  return {target, admitted, admitted / applications};
}

double yield_rate(double typical_yield, double net_price, double typical_net_price, double elasticity,
                  YieldForm form) {
  if (!(net_price > 0.0) || !(typical_net_price > 0.0)) {
    throw SimulationError(FailureKind::pricing, "net tuition is not positive");
  }
  const double ratio = form == YieldForm::elasticity ? net_price / typical_net_price
                                                     : typical_net_price / net_price;
  return std::min(1.0, typical_yield * std::pow(ratio, elasticity));
}

double financial_aid_offer(double typical_aid, double desired, double applications) {
  return typical_aid * desired / applications;
}

StudentFlows student_flows(double students, double time_to_graduation, double yield, double admitted) {
  const double incoming = yield * admitted;
  const double graduates = students / time_to_graduation;
  return {incoming, graduates, incoming - graduates};
}

Reputation selectivity_and_reputation(double admit_rate, double yield, double experience,
                                      const LookupTable& satisfaction, double satisfaction_bias) {
  const double selectivity = ((1.0 - admit_rate) + yield) / 2.0;
  const double sat = eval_piecewise(satisfaction, experience) * (1.0 + satisfaction_bias);
  return {selectivity, sat, (sat + selectivity) / 2.0};
}

FacultyLoad faculty_load(double students, double faculty, double credits_per_student,
                         double standard_ratio) {
  if (!(faculty > 0.0)) {
    throw SimulationError(FailureKind::college_collapse, "no faculty left");
  }
  const double load = students * credits_per_student / faculty;
  const double standard = standard_ratio * credits_per_student;
  return {load, standard, load / standard};
}

FacultyFlows faculty_flows(double load_index, double faculty, double hiring_delay, double turnover_rate,
                           double perceived_experience) {
  if (!(perceived_experience > 0.0)) {
    throw SimulationError(FailureKind::lookup_range, "faculty experience must stay positive");
  }
  const double shortage = std::max(0.0, load_index - 1.0);
  const double hires = shortage * faculty / hiring_delay;
  const double departures = turnover_rate / perceived_experience * faculty;
  return {shortage, hires, departures, hires - departures};
}

double faculty_experience(double load_index, double space_loading, const LookupTable& experience) {
  return eval_piecewise(experience, 0.5 * load_index + 0.5 * space_loading);
}

double space_gap(double target_per_student, double students, double built, double planned) {
  return std::max(0.0, target_per_student * students - (built + planned));
}

double facilities_planning(double competitive_edge, double competitor_space_per_student, double students,
                           double built, double planned, double approval_fraction, double planning_cycle) {
  const double gap = space_gap((1.0 + competitive_edge) * competitor_space_per_student, students, built, planned);
  return approval_fraction * gap / planning_cycle;
}

ConstructionRates construction_step(double planned, double construction_time, double approved) {
  const double completion = planned / construction_time;
  return {completion, approved - completion};
}

double faculty_space(double office_space_per_faculty, double faculty, double built_offices) {
  if (!(built_offices > 0.0)) {
    throw SimulationError(FailureKind::facilities, "no faculty office space");
  }
  return office_space_per_faculty * faculty / built_offices;
}

CapitalFunding capital_funding(double approved_space, double construction_cost, double fund_balance,
                               double max_draw_rate) {
  const double need = construction_cost * approved_space;
  const double draw = fund_balance > 0.0 ? std::min(need, max_draw_rate) : 0.0;
  return {need, draw, need - draw};
}

Financials financial_step(const CollegeState& s, const CollegeParams& p, double construction_borrowing) {
  if (!(s.students > 0.0)) {
    throw SimulationError(FailureKind::college_collapse, "no enrolled students");
  }
  Financials f{};
  f.faculty_cost = p.faculty_compensation * s.faculty;
  f.facilities_cost = p.facilities_operating_cost * (s.student_space + s.faculty_space);
  f.aid_cost = s.typical_aid * s.students;
  f.principal_payment = s.debt / p.debt_term;
  f.debt_cost = f.principal_payment + p.debt_interest_rate * s.debt;
  f.expenditures = f.faculty_cost + f.facilities_cost + f.debt_cost + f.aid_cost;

  f.tuition_revenue = s.sticker_price * s.students;
  // Deficit waterfall: cash, then the capped endowment draw, then borrowing.
  f.gross_deficit = std::max(0.0, f.expenditures - f.tuition_revenue - p.unrestricted_gifts);
  f.cash_draw = std::min(f.gross_deficit, s.cash / p.cash_window);
  f.endowment_draw = std::min(f.gross_deficit - f.cash_draw, p.endowment_draw_cap * s.endowment);
  f.operating_borrowing = f.gross_deficit - f.cash_draw - f.endowment_draw;
  f.revenue = f.tuition_revenue + f.cash_draw + f.endowment_draw + p.unrestricted_gifts;
  f.surplus = f.revenue - f.expenditures;

  f.price_rate = f.surplus < 0.0
                     ? std::min(-f.surplus / s.students, p.max_tuition_increase * s.reference_price) /
                           p.tuition_adjustment_delay
                     : 0.0;
  f.cash_rate = std::max(0.0, f.surplus) - f.cash_draw;
  f.debt_rate = construction_borrowing + f.operating_borrowing - f.principal_payment;
  f.endowment_rate = p.restricted_gifts + p.endowment_return * s.endowment - f.endowment_draw;

  f.expenditure_per_student = f.expenditures / s.students;
  f.discount_rate = f.aid_cost / f.tuition_revenue;
  return f;
}

double exp_smooth(double smooth, double instantaneous, double tau, double dt) {
  return smooth + (instantaneous - smooth) * dt / tau;
}

CollegeEvaluation evaluate_college(const CollegeParams& p, const CollegeState& s, const CollegeInputs& in) {
  CollegeEvaluation out;
  CollegeAux& a = out.aux;
  CollegeRates& r = out.rates;

  // students
  a.applications = in.applications;
  a.desired_applications = desired_applications(p.target_class, s.typical_admit_rate, s.typical_yield);
  const Admission adm = admit_students(in.applications, p.target_class, s.typical_yield);
  a.admit_target = adm.target;
  a.admitted = adm.admitted;
  a.admit_rate = adm.rate;
  a.aid_offer = financial_aid_offer(s.typical_aid, a.desired_applications, in.applications);
  a.net_price = s.sticker_price - s.typical_aid;
  a.yield = yield_rate(s.typical_yield, a.net_price, s.typical_net_price, p.yield_elasticity, p.yield_form);
  const StudentFlows sf = student_flows(s.students, p.time_to_graduation, a.yield, a.admitted);
  a.incoming = sf.incoming;
  a.graduates = sf.graduates;

  // faculty
  const FacultyLoad fl =
      faculty_load(s.students, s.faculty, p.credits_per_student, p.standard_student_faculty_ratio);
  a.teaching_load = fl.load;
  a.standard_load = fl.standard_load;
  a.load_index = fl.index;
  a.space_loading = faculty_space(p.office_space_per_faculty, s.faculty, s.faculty_space);
  a.experience = faculty_experience(a.load_index, a.space_loading, p.experience);
  const FacultyFlows ff =
      faculty_flows(a.load_index, s.faculty, p.hiring_delay, p.turnover_rate, s.perceived_experience);
  a.shortage = ff.shortage;
  a.hires = ff.hires;
  a.departures = ff.departures;

  const Reputation rep =
      selectivity_and_reputation(a.admit_rate, a.yield, a.experience, p.satisfaction, p.satisfaction_bias);
  a.selectivity = rep.selectivity;
  a.satisfaction = rep.satisfaction;
  a.reputation = rep.overall;

  // facilities
  a.space_per_student = s.students > 0.0 ? s.student_space / s.students : 0.0;
  const double approval = s.capital_fund > 0.0 ? p.gift_approval_fraction : p.approval_fraction;
  if (in.positional) {
    a.space_gap = space_gap((1.0 + p.competitive_edge) * in.competitor_space_per_student, s.students,
                            s.student_space, s.planned_student_space);
    a.approved_construction =
        facilities_planning(p.competitive_edge, in.competitor_space_per_student, s.students, s.student_space,
                            s.planned_student_space, approval, p.planning_cycle);
  } else {
    a.space_gap = space_gap(p.base_space_per_student, s.students, s.student_space, s.planned_student_space);
    a.approved_construction = approval * a.space_gap / p.planning_cycle;
  }
  a.office_gap = space_gap(p.office_space_per_faculty, s.faculty, s.faculty_space, s.planned_faculty_space);
  a.approved_offices = approval * a.office_gap / p.planning_cycle;
  const ConstructionRates student_build =
      construction_step(s.planned_student_space, p.construction_time, a.approved_construction);
  const ConstructionRates office_build =
      construction_step(s.planned_faculty_space, p.construction_time, a.approved_offices);

  const CapitalFunding cf = capital_funding(a.approved_construction + a.approved_offices, p.construction_cost,
                                            s.capital_fund, s.capital_fund / in.dt);
  a.capital_need = cf.need;
  a.gift_draw = cf.gift_draw;
  a.construction_borrowing = cf.borrowing;

  // financials
  const Financials fin = financial_step(s, p, cf.borrowing);
  a.faculty_cost = fin.faculty_cost;
  a.facilities_cost = fin.facilities_cost;
  a.principal_payment = fin.principal_payment;
  a.debt_cost = fin.debt_cost;
  a.aid_cost = fin.aid_cost;
  a.expenditures = fin.expenditures;
  a.tuition_revenue = fin.tuition_revenue;
  a.gross_deficit = fin.gross_deficit;
  a.cash_draw = fin.cash_draw;
  a.endowment_draw = fin.endowment_draw;
  a.operating_borrowing = fin.operating_borrowing;
  a.revenue = fin.revenue;
  a.surplus = fin.surplus;
  a.expenditure_per_student = fin.expenditure_per_student;
  a.discount_rate = fin.discount_rate;

  r.students = sf.net;
  r.faculty = ff.net;
  r.student_space = student_build.built;
  r.planned_student_space = student_build.planned;
  r.faculty_space = office_build.built;
  r.planned_faculty_space = office_build.planned;
  r.sticker_price = fin.price_rate;
  r.cash = fin.cash_rate;
  r.debt = fin.debt_rate;
  r.endowment = fin.endowment_rate;
  r.capital_fund = -cf.gift_draw;
  r.typical_net_price = (a.net_price - s.typical_net_price) / p.net_price_smoothing;
  r.typical_aid = (a.aid_offer - s.typical_aid) / p.aid_smoothing;
  r.typical_admit_rate = (a.admit_rate - s.typical_admit_rate) / p.admit_rate_smoothing;
  r.typical_yield = (a.yield - s.typical_yield) / p.yield_smoothing;
  r.perceived_experience = (a.experience - s.perceived_experience) / p.departure_delay;
  return out;
}

CollegeState advance(const CollegeState& s, const CollegeRates& r, double dt) {
  CollegeState n = s;
  n.students += r.students * dt;
  n.faculty += r.faculty * dt;
  n.student_space += r.student_space * dt;
  n.planned_student_space += r.planned_student_space * dt;
  n.faculty_space += r.faculty_space * dt;
  n.planned_faculty_space += r.planned_faculty_space * dt;
  n.sticker_price += r.sticker_price * dt;
  n.cash += r.cash * dt;
  n.debt += r.debt * dt;
  n.endowment += r.endowment * dt;
  n.capital_fund = std::max(0.0, n.capital_fund + r.capital_fund * dt);
  n.typical_net_price += r.typical_net_price * dt;
  n.typical_aid += r.typical_aid * dt;
  n.typical_admit_rate += r.typical_admit_rate * dt;
  n.typical_yield += r.typical_yield * dt;
  n.perceived_experience += r.perceived_experience * dt;
  return n;
}

}  // namespace tuition
