#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tuition/model.hpp"

namespace tuition {

enum class CalibrationMode {
  solve,      // flow equilibrium by damped fixed point
  nominal  // nominal initial values taken as given, no solving
};

/// Anchors held fixed during calibration.
struct CalibrationTargets {
  double students = 3375.0;
  double sticker_price = 31187.0;
  double endowment = 50e6;
  double cash = 0.0;
  double debt = 0.0;
  double typical_yield = 0.3;
  double applications = 10000.0;  // per college, equal split of the pool
  bool operator==(const CalibrationTargets&) const = default;
};

struct Residual {
  std::string stock;
  double relative = 0.0;
};

struct CalibrationReport {
  CollegeState state;
  CalibrationMode mode = CalibrationMode::solve;
  int iterations = 0;
  std::vector<Residual> residuals;
  double max_residual = 0.0;
  double load_index = 0.0;  // l_F at the solution
  double shortage = 0.0;    // nu
  double experience = 0.0;  // Q_F
  double discount_rate = 0.0;
  std::vector<std::string> notes;
};

/// Thrown when no non-negative aid level balances the budget.
class CalibrationError : public std::runtime_error {
 public:
  CalibrationError(std::string binding, double break_even_zero_aid, double break_even_reference,
                   const std::string& what)
      : std::runtime_error(what),
        binding_(std::move(binding)),
        zero_aid_(break_even_zero_aid),
        reference_(break_even_reference) {}
  const std::string& binding_constraint() const noexcept { return binding_; }
  /// Facilities operating cost at which the budget balances with no aid.
  double break_even_zero_aid() const noexcept { return zero_aid_; }
  /// Same, at the reference discount rate.
  double break_even_reference() const noexcept { return reference_; }

 private:
  std::string binding_;
  double zero_aid_;
  double reference_;
};

inline constexpr double kReferenceDiscountRate = 0.30;

CalibrationReport calibrate_steady_state(const CollegeParams& params, const CalibrationTargets& targets,
                                         CalibrationMode mode = CalibrationMode::solve);

/// Relative magnitude of every stock derivative at `state` with competition off.
std::vector<Residual> steady_state_residuals(const CollegeParams& params, const CollegeState& state,
                                             double applications);

const char* to_string(CalibrationMode mode);

}  // namespace tuition
