#include "tuition/lookup.hpp"

#include <algorithm>
#include <sstream>

namespace tuition {

namespace {

TableError make_error(TableRule rule, std::size_t index, const std::string& what) {
  std::ostringstream os;
  os << what << " at point " << index;
  return TableError{rule, index, os.str()};
}

bool in_range(const ValueRange& r, double y) {
  const bool above_lower = r.lower_inclusive ? y >= r.lower : y > r.lower;
  return above_lower && y <= r.upper;
}

}  // namespace

std::optional<TableError> validate_table(const LookupTable& table) {
  const auto& pts = table.points;
  if (pts.size() < 2) {
    return make_error(TableRule::too_few_points, pts.size(), "fewer than 2 points");
  }
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i].x > pts[i - 1].x)) {
      return make_error(TableRule::x_not_increasing, i, "x not strictly increasing");
    }
  }
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double step = pts[i].y - pts[i - 1].y;
    const bool ok = table.direction == Monotonicity::increasing ? step >= 0.0 : step <= 0.0;
    if (!ok) {
      return make_error(TableRule::monotonicity, i,
                        std::string("monotonicity violation, declared ") + to_string(table.direction));
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!in_range(table.range, pts[i].y)) {
      return make_error(TableRule::y_out_of_range, i, "y out of range");
    }
  }
  return std::nullopt;
}

double eval_piecewise(const LookupTable& table, double x) {
  const auto& pts = table.points;
  if (x <= pts.front().x) return pts.front().y;
  if (x >= pts.back().x) return pts.back().y;
  auto hi = std::upper_bound(pts.begin(), pts.end(), x,
                             [](double v, const LookupPoint& p) { return v < p.x; });
  auto lo = std::prev(hi);
  if (x == lo->x) return lo->y;
  const double w = (x - lo->x) / (hi->x - lo->x);
  return lo->y + w * (hi->y - lo->y);
}

LookupTable default_satisfaction_table() {
  return LookupTable{{{0.0, 0.2}, {0.5, 0.6}, {0.8, 0.9}, {1.0, 1.0}},
                     Monotonicity::increasing,
                     ValueRange{0.0, 1.0, true}};
}

LookupTable default_experience_table() {
  return LookupTable{{{0.5, 1.0}, {1.0, 0.9}, {1.5, 0.6}, {2.0, 0.3}, {3.0, 0.1}},
                     Monotonicity::decreasing,
                     ValueRange{0.0, 1.0, false}};
}

const char* to_string(Monotonicity m) {
  return m == Monotonicity::increasing ? "increasing" : "decreasing";
}

const char* to_string(TableRule r) {
  switch (r) {
    case TableRule::too_few_points: return "too_few_points";
    case TableRule::x_not_increasing: return "x_not_increasing";
    case TableRule::monotonicity: return "monotonicity";
    case TableRule::y_out_of_range: return "y_out_of_range";
  }
  return "unknown";
}

}  // namespace tuition
