#pragma once

#include <string>

#include "tuition/lookup.hpp"

namespace tuition {

enum class YieldForm {
  elasticity,  // y = y_bar * (NP / NP_bar)^alpha : a higher net price lowers yield when alpha < 0
  literal      // y = y_bar * (NP_bar / NP)^alpha, the ratio inverted
};

/// Per-college constants. Defaults are the shipped calibration; see README for
/// the provenance of each value.
struct CollegeParams {
  // students
  double time_to_graduation = 4.5;         // years
  double target_class = 750.0;             // students/year
  double yield_elasticity = -0.3;          // dimensionless
  YieldForm yield_form = YieldForm::elasticity;
  double satisfaction_bias = 0.0;          // relative offset applied to Q_Y
  // faculty
  double standard_student_faculty_ratio = 5.0;  // students/faculty
  double credits_per_student = 100.0;           // credits/student/year
  double turnover_rate = 0.1;                   // 1/year
  double hiring_delay = 2.0;                    // years
  double departure_delay = 2.0;                 // years, perception delay on Q_F
  // facilities
  double construction_time = 3.0;          // years
  double approval_fraction = 0.2;          // share of the space gap approved per planning cycle
  double gift_approval_fraction = 1.0;     // approval share while a capital gift is unspent
  double planning_cycle = 1.0;             // years
  double base_space_per_student = 100.0;   // ft^2/student
  double office_space_per_faculty = 315.0; // ft^2/faculty
  double competitive_edge = 0.05;          // k
  bool matches_competitor = true;          // false once a college ignores the rankings
  // financials
  double facilities_operating_cost = 75.0; // $/ft^2/year
  double construction_cost = 300.0;        // $/ft^2
  double faculty_compensation = 50000.0;   // $/faculty/year
  double max_tuition_increase = 0.05;      // fraction/year
  double tuition_adjustment_delay = 1.0;   // years
  double endowment_draw_cap = 0.05;        // fraction/year
  double debt_interest_rate = 0.047;       // 1/year
  double endowment_return = 0.0;           // 1/year
  double debt_term = 10.0;                 // years
  double cash_window = 1.0;                // years
  double unrestricted_gifts = 0.0;         // $/year
  double restricted_gifts = 0.0;           // $/year
  // smoothing of the "typical" values
  double net_price_smoothing = 3.0;        // years
  double aid_smoothing = 20.0;             // years
  double admit_rate_smoothing = 1.0;       // years
  double yield_smoothing = 2.0;            // years

  LookupTable satisfaction = default_satisfaction_table();  // g_Y
  LookupTable experience = default_experience_table();      // g_F

  bool operator==(const CollegeParams&) const = default;
};

/// Integrated stocks of one college.
struct CollegeState {
  double students = 0.0;               // Y
  double faculty = 0.0;                // F
  double student_space = 0.0;          // B_Y, ft^2
  double planned_student_space = 0.0;  // K_Y, ft^2
  double faculty_space = 0.0;          // B_F, ft^2
  double planned_faculty_space = 0.0;  // K_F, ft^2
  double sticker_price = 0.0;          // P, $/student/year
  double reference_price = 0.0;        // P at the start of the fiscal year
  double cash = 0.0;                   // M
  double debt = 0.0;                   // D
  double endowment = 0.0;              // E
  double capital_fund = 0.0;           // unspent capital gifts, $
  double typical_net_price = 0.0;      // NP_bar
  double typical_aid = 0.0;            // phi_bar
  double typical_admit_rate = 0.0;     // lambda_bar
  double typical_yield = 0.0;          // y_bar
  double perceived_experience = 0.0;   // Q_F as perceived by faculty

  bool operator==(const CollegeState&) const = default;
};

/// Everything derived from a state within one step.
struct CollegeAux {
  double applications = 0.0;          // A^i
  double desired_applications = 0.0;  // A*
  double admit_target = 0.0;          // A_Y*
  double admitted = 0.0;              // A_Y
  double admit_rate = 0.0;            // lambda_Y
  double yield = 0.0;                 // y
  double incoming = 0.0;              // i_Y
  double graduates = 0.0;             // o_Y
  double aid_offer = 0.0;             // phi
  double net_price = 0.0;             // NP
  double teaching_load = 0.0;         // L_Y
  double standard_load = 0.0;         // L_Y bar
  double load_index = 0.0;            // l_F
  double shortage = 0.0;              // nu
  double hires = 0.0;                 // i_F
  double departures = 0.0;            // o_F
  double space_loading = 0.0;         // gamma_B
  double experience = 0.0;            // Q_F (instantaneous)
  double satisfaction = 0.0;          // Q_Y
  double selectivity = 0.0;           // Q_A
  double reputation = 0.0;            // Q
  double space_per_student = 0.0;     // b_Y
  double space_gap = 0.0;
  double approved_construction = 0.0;  // b_B, ft^2/year
  double office_gap = 0.0;
  double approved_offices = 0.0;       // ft^2/year
  double capital_need = 0.0;           // $/year
  double gift_draw = 0.0;              // $/year
  double construction_borrowing = 0.0; // d_B
  double faculty_cost = 0.0;           // C_F
  double facilities_cost = 0.0;        // C_B
  double principal_payment = 0.0;      // p_D
  double debt_cost = 0.0;              // C_D
  double aid_cost = 0.0;               // C_A
  double expenditures = 0.0;           // C
  double tuition_revenue = 0.0;        // R_Y
  double gross_deficit = 0.0;          // G
  double cash_draw = 0.0;              // o_m
  double endowment_draw = 0.0;         // o_E
  double operating_borrowing = 0.0;    // m_D
  double revenue = 0.0;                // R
  double surplus = 0.0;                // S
  double expenditure_per_student = 0.0;  // e
  double discount_rate = 0.0;            // delta_R
};

/// Time derivatives of every stock in CollegeState, same field order.
struct CollegeRates {
  double students = 0.0;
  double faculty = 0.0;
  double student_space = 0.0;
  double planned_student_space = 0.0;
  double faculty_space = 0.0;
  double planned_faculty_space = 0.0;
  double sticker_price = 0.0;
  double cash = 0.0;
  double debt = 0.0;
  double endowment = 0.0;
  double capital_fund = 0.0;
  double typical_net_price = 0.0;
  double typical_aid = 0.0;
  double typical_admit_rate = 0.0;
  double typical_yield = 0.0;
  double perceived_experience = 0.0;
};

// ---- students -------------------------------------------------------------

/// A* = Y_bar / (lambda_bar * y_bar).
double desired_applications(double target_class, double typical_admit_rate, double typical_yield);

struct Admission {
  double target;  // A_Y*
  double admitted;
  double rate;
};
Admission admit_students(double applications, double target_class, double typical_yield);

double yield_rate(double typical_yield, double net_price, double typical_net_price, double elasticity,
                  YieldForm form = YieldForm::elasticity);

/// phi = phi_bar * A* / A^i
double financial_aid_offer(double typical_aid, double desired, double applications);

struct StudentFlows {
  double incoming;
  double graduates;
  double net;
};
StudentFlows student_flows(double students, double time_to_graduation, double yield, double admitted);

struct Reputation {
  double selectivity;   // Q_A
  double satisfaction;  // Q_Y
  double overall;       // Q
};
Reputation selectivity_and_reputation(double admit_rate, double yield, double experience,
                                      const LookupTable& satisfaction, double satisfaction_bias = 0.0);

// ---- faculty --------------------------------------------------------------

struct FacultyLoad {
  double load;           // L_Y
  double standard_load;  // L_Y bar
  double index;          // l_F
};
FacultyLoad faculty_load(double students, double faculty, double credits_per_student,
                         double standard_ratio);

struct FacultyFlows {
  double shortage;
  double hires;
  double departures;
  double net;
};
FacultyFlows faculty_flows(double load_index, double faculty, double hiring_delay, double turnover_rate,
                           double perceived_experience);

/// Q_F = g_F(0.5 l_F + 0.5 gamma_B)
double faculty_experience(double load_index, double space_loading, const LookupTable& experience);

// ---- facilities -----------------------------------------------------------

/// max(0, target * Y - (B + K))
double space_gap(double target_per_student, double students, double built, double planned);

/// Approved construction flow when matching the competitor's space per student.
double facilities_planning(double competitive_edge, double competitor_space_per_student, double students,
                           double built, double planned, double approval_fraction,
                           double planning_cycle = 1.0);

struct ConstructionRates {
  double built;    // dB/dt
  double planned;  // dK/dt
};
ConstructionRates construction_step(double planned, double construction_time, double approved);

/// gamma_B = b_F F / B_F
double faculty_space(double office_space_per_faculty, double faculty, double built_offices);

// ---- financials -----------------------------------------------------------

struct CapitalFunding {
  double need;       // $/year
  double gift_draw;  // $/year from the capital fund
  double borrowing;  // d_B
};
/// `max_draw_rate` bounds the fund outflow (fund balance / dt for an Euler step).
CapitalFunding capital_funding(double approved_space, double construction_cost, double fund_balance,
                               double max_draw_rate);

struct Financials {
  double faculty_cost, facilities_cost, principal_payment, debt_cost, aid_cost, expenditures;
  double tuition_revenue, gross_deficit, cash_draw, endowment_draw, operating_borrowing;
  double revenue, surplus;
  double price_rate, cash_rate, debt_rate, endowment_rate;
  double expenditure_per_student, discount_rate;
};
Financials financial_step(const CollegeState& state, const CollegeParams& params,
                          double construction_borrowing);

// ---- composition ----------------------------------------------------------

/// What the market and the competitor hand a college for one evaluation.
struct CollegeInputs {
  double applications = 0.0;
  double competitor_space_per_student = 0.0;
  bool positional = false;  // rankings active and this college matches its rival
  double dt = 0.125;        // bounds the capital-fund draw
};

struct CollegeEvaluation {
  CollegeAux aux;
  CollegeRates rates;
};

/// All sector equations for one college at one instant.
CollegeEvaluation evaluate_college(const CollegeParams& params, const CollegeState& state,
                                   const CollegeInputs& inputs);

/// Explicit Euler update. Smoothed values move by exp_smooth, which is the same
/// first-order update written as a relaxation.
CollegeState advance(const CollegeState& state, const CollegeRates& rates, double dt);

/// smooth + (instantaneous - smooth) * dt / tau
double exp_smooth(double smooth, double instantaneous, double tau, double dt);

}  // namespace tuition
