#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tuition {

enum class Monotonicity { increasing, decreasing };

struct LookupPoint {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const LookupPoint&) const = default;
};

// Admissible range for the table's y values. The lower bound is open when
// `lower_inclusive` is false, e.g. (0, 1] for the faculty experience curve.
struct ValueRange {
  double lower = 0.0;
  double upper = 1.0;
  bool lower_inclusive = true;
  bool operator==(const ValueRange&) const = default;
};

/// Monotone piecewise-linear graphical function. Plain data: build it, run
/// validate_table() once, then share it freely.
struct LookupTable {
  std::vector<LookupPoint> points;
  Monotonicity direction = Monotonicity::increasing;
  ValueRange range;
  bool operator==(const LookupTable&) const = default;
};

enum class TableRule { too_few_points, x_not_increasing, monotonicity, y_out_of_range };

struct TableError {
  TableRule rule;
  std::size_t index;  // first offending point
  std::string message;
};

/// Checks every table invariant; returns the first violation.
std::optional<TableError> validate_table(const LookupTable& table);

/// Linear interpolation with clamped (flat) extrapolation. Callers must pass a
/// validated table.
double eval_piecewise(const LookupTable& table, double x);

/// Student satisfaction as a function of faculty academic experience.
LookupTable default_satisfaction_table();

/// Faculty academic experience as a function of the load/space composite.
LookupTable default_experience_table();

const char* to_string(Monotonicity m);
const char* to_string(TableRule r);

}  // namespace tuition
