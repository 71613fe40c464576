#pragma once

#include <span>
#include <string>
#include <string_view>

#include "tuition/model.hpp"

namespace tuition {

/// One numeric college parameter: its config key, declared unit and admissible
/// interval. The same table drives config loading, event resolution and
/// hashing.
struct ParamSpec {
  std::string_view name;
  std::string_view unit;
  double CollegeParams::*member;
  double lower;
  double upper;
  bool lower_open;
  bool upper_open;
};

std::span<const ParamSpec> college_param_specs();

/// nullptr when `name` is not a known parameter.
const ParamSpec* find_param(std::string_view name);

/// Empty when `value` is admissible, otherwise a message such as "k ∈ [0,1]".
std::string check_bounds(const ParamSpec& spec, double value);

}  // namespace tuition
