#pragma once

#include "tuition/config.hpp"

namespace testing_support {

/// Default calibrated two-college setup, built once per process.
inline const tuition::SimConfig& base_config() {
  static const tuition::SimConfig config = tuition::default_config();
  return config;
}

}  // namespace testing_support
