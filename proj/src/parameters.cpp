#include "tuition/parameters.hpp"

#include <array>
#include <limits>
#include <sstream>

namespace tuition {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// name, unit, member, lower, upper, lower_open, upper_open
const std::array kSpecs{
    ParamSpec{"time_to_graduation", "years", &CollegeParams::time_to_graduation, 0, inf, true, true},
    ParamSpec{"target_class", "students/year", &CollegeParams::target_class, 0, inf, true, true},
    ParamSpec{"yield_elasticity", "dimensionless", &CollegeParams::yield_elasticity, -inf, inf, true, true},
    ParamSpec{"satisfaction_bias", "dimensionless", &CollegeParams::satisfaction_bias, -1, 1, true, true},
    ParamSpec{"standard_student_faculty_ratio", "students/faculty",
              &CollegeParams::standard_student_faculty_ratio, 0, inf, true, true},
    ParamSpec{"credits_per_student", "credits/student/year", &CollegeParams::credits_per_student, 0, inf,
              true, true},
    ParamSpec{"turnover_rate", "1/year", &CollegeParams::turnover_rate, 0, 1, true, true},
    ParamSpec{"hiring_delay", "years", &CollegeParams::hiring_delay, 0, inf, true, true},
    ParamSpec{"departure_delay", "years", &CollegeParams::departure_delay, 0, inf, true, true},
    ParamSpec{"construction_time", "years", &CollegeParams::construction_time, 0, inf, true, true},
    ParamSpec{"approval_fraction", "fraction", &CollegeParams::approval_fraction, 0, 1, false, false},
    ParamSpec{"gift_approval_fraction", "fraction", &CollegeParams::gift_approval_fraction, 0, 1, false,
              false},
    ParamSpec{"planning_cycle", "years", &CollegeParams::planning_cycle, 0, inf, true, true},
    ParamSpec{"base_space_per_student", "ft^2/student", &CollegeParams::base_space_per_student, 0, inf,
              true, true},
    ParamSpec{"office_space_per_faculty", "ft^2/faculty", &CollegeParams::office_space_per_faculty, 0, inf,
              true, true},
    ParamSpec{"competitive_edge", "dimensionless", &CollegeParams::competitive_edge, 0, 1, false, false},
    ParamSpec{"facilities_operating_cost", "$/ft^2/year", &CollegeParams::facilities_operating_cost, 0, inf,
              false, true},
    ParamSpec{"construction_cost", "$/ft^2", &CollegeParams::construction_cost, 0, inf, true, true},
    ParamSpec{"faculty_compensation", "$/faculty/year", &CollegeParams::faculty_compensation, 0, inf, false,
              true},
    ParamSpec{"max_tuition_increase", "fraction/year", &CollegeParams::max_tuition_increase, 0, inf, true,
              true},
    ParamSpec{"tuition_adjustment_delay", "years", &CollegeParams::tuition_adjustment_delay, 0, inf, true,
              true},
    ParamSpec{"endowment_draw_cap", "fraction/year", &CollegeParams::endowment_draw_cap, 0, 0.05, true,
              false},
    ParamSpec{"debt_interest_rate", "1/year", &CollegeParams::debt_interest_rate, 0, inf, false, true},
    ParamSpec{"endowment_return", "1/year", &CollegeParams::endowment_return, 0, inf, false, true},
    ParamSpec{"debt_term", "years", &CollegeParams::debt_term, 0, inf, true, true},
    ParamSpec{"cash_window", "years", &CollegeParams::cash_window, 0, inf, true, true},
    ParamSpec{"unrestricted_gifts", "$/year", &CollegeParams::unrestricted_gifts, 0, inf, false, true},
    ParamSpec{"restricted_gifts", "$/year", &CollegeParams::restricted_gifts, 0, inf, false, true},
    ParamSpec{"net_price_smoothing", "years", &CollegeParams::net_price_smoothing, 0, inf, true, true},
    ParamSpec{"aid_smoothing", "years", &CollegeParams::aid_smoothing, 0, inf, true, true},
    ParamSpec{"admit_rate_smoothing", "years", &CollegeParams::admit_rate_smoothing, 0, inf, true, true},
    ParamSpec{"yield_smoothing", "years", &CollegeParams::yield_smoothing, 0, inf, true, true},
};

std::string fmt_bound(double v) {
  if (v == inf) return "inf";
  if (v == -inf) return "-inf";
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::span<const ParamSpec> college_param_specs() { return kSpecs; }

const ParamSpec* find_param(std::string_view name) {
  for (const auto& s : kSpecs) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

std::string check_bounds(const ParamSpec& spec, double value) {
  const bool lower_ok = spec.lower_open ? value > spec.lower : value >= spec.lower;
  const bool upper_ok = spec.upper_open ? value < spec.upper : value <= spec.upper;
  if (lower_ok && upper_ok && value == value) return {};
  std::ostringstream os;
  os << spec.name << " ∈ " << (spec.lower_open ? "(" : "[") << fmt_bound(spec.lower) << ","
     << fmt_bound(spec.upper) << (spec.upper_open ? ")" : "]") << ", got " << value;
  return os.str();
}

}  // namespace tuition
