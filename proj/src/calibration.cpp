#include "tuition/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tuition {

namespace {

struct FacultyBalance {
  double faculty;
  double load_index;
  double experience;
  int iterations;
};

// nu F / tau_h = (phi / Q_F) F with offices sized so gamma_B = 1.
FacultyBalance solve_faculty(const CollegeParams& p, double students) {
  double qf = eval_piecewise(p.experience, 1.0);
  int it = 0;
  for (; it < 10000; ++it) {
    const double lf = 1.0 + p.hiring_delay * p.turnover_rate / qf;
    const double next = eval_piecewise(p.experience, 0.5 * lf + 0.5);
    const double damped = 0.5 * qf + 0.5 * next;
    const bool done = std::abs(damped - qf) < 1e-15;
    qf = damped;
    if (done) break;
  }
  const double lf = 1.0 + p.hiring_delay * p.turnover_rate / qf;
  const double faculty = students / (p.standard_student_faculty_ratio * lf);
  return {faculty, lf, qf, it + 1};
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

std::vector<Residual> steady_state_residuals(const CollegeParams& p, const CollegeState& s, double applications) {
  CollegeInputs in;
  in.applications = applications;
  in.competitor_space_per_student = s.student_space / s.students;
  in.positional = false;
  const CollegeEvaluation ev = evaluate_college(p, s, in);
  const CollegeRates& r = ev.rates;
  const double money = std::max(ev.aux.expenditures, 1.0);
  auto rel = [](double rate, double scale) { return std::abs(rate) / std::max(std::abs(scale), 1e-300); };
  return {
      {"students", rel(r.students, s.students)},
      {"faculty", rel(r.faculty, s.faculty)},
      {"student_space", rel(r.student_space, s.student_space)},
      {"planned_student_space", rel(r.planned_student_space, s.student_space)},
      {"faculty_space", rel(r.faculty_space, s.faculty_space)},
      {"planned_faculty_space", rel(r.planned_faculty_space, s.faculty_space)},
      {"sticker_price", rel(r.sticker_price, s.sticker_price)},
      {"cash", rel(r.cash, money)},
      {"debt", rel(r.debt, money)},
      {"endowment", rel(r.endowment, std::max(s.endowment, money))},
      {"typical_net_price", rel(r.typical_net_price, s.typical_net_price)},
      {"typical_aid", rel(r.typical_aid, std::max(s.typical_aid, s.sticker_price))},
      {"typical_admit_rate", rel(r.typical_admit_rate, s.typical_admit_rate)},
      {"typical_yield", rel(r.typical_yield, s.typical_yield)},
      {"perceived_experience", rel(r.perceived_experience, s.perceived_experience)},
  };
}

CalibrationReport calibrate_steady_state(const CollegeParams& p, const CalibrationTargets& t,
                                         CalibrationMode mode) {
  CalibrationReport rep;
  rep.mode = mode;
  CollegeState& s = rep.state;
  s.students = t.students;
  s.sticker_price = t.sticker_price;
  s.reference_price = t.sticker_price;
  s.endowment = t.endowment;
  s.cash = t.cash;
  s.debt = t.debt;
  s.typical_yield = t.typical_yield;
  s.student_space = p.base_space_per_student * t.students;

  const double admitted = p.target_class / t.typical_yield;
  if (admitted > t.applications) {
    throw CalibrationError("target_class / typical_yield <= applications", 0.0, 0.0,
                           "not enough applications to fill the target class: need " + fmt(admitted) +
                               ", have " + fmt(t.applications));
  }
  s.typical_admit_rate = admitted / t.applications;

  if (mode == CalibrationMode::nominal) {
    s.faculty = t.students / p.standard_student_faculty_ratio;
    s.faculty_space = p.office_space_per_faculty * s.faculty;
    s.typical_aid = kReferenceDiscountRate * t.sticker_price;
    s.typical_net_price = t.sticker_price - s.typical_aid;
    s.perceived_experience = eval_piecewise(p.experience, 1.0);
    rep.iterations = 0;
  } else {
    const double graduates = t.students / p.time_to_graduation;
    if (std::abs(graduates - p.target_class) > 1e-9 * p.target_class) {
      rep.notes.push_back("target class " + fmt(p.target_class) + " differs from graduating class " +
                          fmt(graduates) + "; enrollment is not in equilibrium");
    }
    const FacultyBalance fb = solve_faculty(p, t.students);
    rep.iterations = fb.iterations;
    s.faculty = fb.faculty;
    s.faculty_space = p.office_space_per_faculty * s.faculty;
    s.perceived_experience = fb.experience;

    // Budget balances with the deficit covered by endowment income and restricted gifts.
    const double faculty_cost = p.faculty_compensation * s.faculty;
    const double space = s.student_space + s.faculty_space;
    const double debt_cost = s.debt / p.debt_term + p.debt_interest_rate * s.debt;
    const double income = t.sticker_price * t.students + p.unrestricted_gifts + p.restricted_gifts +
                          p.endowment_return * t.endowment;
    const double aid_total = income - faculty_cost - p.facilities_operating_cost * space - debt_cost;
    const double break_even_zero = (income - faculty_cost - debt_cost) / space;
    const double break_even_ref =
        (income - kReferenceDiscountRate * t.sticker_price * t.students - faculty_cost - debt_cost) / space;
    if (aid_total < 0.0) {
      throw CalibrationError(
          "typical_aid >= 0", break_even_zero, break_even_ref,
          "structural deficit: costs exceed revenue by " + fmt(-aid_total) +
              " $/year before any aid; break-even facilities_operating_cost is " + fmt(break_even_zero) +
              " $/ft^2/year at zero aid and " + fmt(break_even_ref) + " $/ft^2/year at a " +
              fmt(100 * kReferenceDiscountRate) + "% discount rate");
    }
    const double draw_needed = p.restricted_gifts + p.endowment_return * t.endowment;
    if (draw_needed > p.endowment_draw_cap * t.endowment + 1e-9 * income) {
      throw CalibrationError("endowment draw <= endowment_draw_cap * endowment", break_even_zero, break_even_ref,
                             "steady-state endowment draw " + fmt(draw_needed) + " exceeds the cap " +
                                 fmt(p.endowment_draw_cap * t.endowment));
    }
    s.typical_aid = aid_total / t.students;
    s.typical_net_price = t.sticker_price - s.typical_aid;
    if (!(s.typical_net_price > 0.0)) {
      throw CalibrationError("typical_net_price > 0", break_even_zero, break_even_ref,
                             "aid needed to balance the budget exceeds the sticker price");
    }
  }

  CollegeInputs in;
  in.applications = t.applications;
  in.competitor_space_per_student = p.base_space_per_student;
  const CollegeEvaluation ev = evaluate_college(p, s, in);
  rep.load_index = ev.aux.load_index;
  rep.shortage = ev.aux.shortage;
  rep.experience = ev.aux.experience;
  rep.discount_rate = ev.aux.discount_rate;
  rep.residuals = steady_state_residuals(p, s, t.applications);
  for (const Residual& r : rep.residuals) rep.max_residual = std::max(rep.max_residual, r.relative);
  if (mode == CalibrationMode::solve) {
    rep.notes.push_back("faculty balance needs l_F = " + fmt(rep.load_index) + " (shortage nu = " +
                        fmt(rep.shortage) + "), not l_F = 1: hiring only happens while faculty are overloaded");
  }
  return rep;
}

const char* to_string(CalibrationMode m) { return m == CalibrationMode::solve ? "solve" : "nominal"; }

}  // namespace tuition
