#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "tuition/calibration.hpp"
#include "tuition/engine.hpp"
#include "tuition/scenarios.hpp"

namespace tuition {

/// Relative lift of College A's student satisfaction; the only asymmetry
/// between the two colleges in the default setup.
inline constexpr double kDefaultSatisfactionEdge = 0.01;

struct OutputOptions {
  std::string dir = "out";
  bool csv = true;
  bool json = true;
  bool operator==(const OutputOptions&) const = default;
};

struct LoadedConfig {
  SimConfig sim;
  CalibrationMode mode = CalibrationMode::solve;
  CalibrationTargets targets;
  std::optional<ScenarioId> scenario;
  OutputOptions output;
  // Present for each college whose initial state came from calibration.
  std::array<std::optional<CalibrationReport>, 2> calibration;
};

/// Both colleges calibrated to the steady state, no events.
SimConfig default_config(CalibrationMode mode = CalibrationMode::solve, const CalibrationTargets& targets = {});

/// Parses and validates a JSON config document. Omitted keys take defaults.
/// Throws ConfigError (or CalibrationError when the steady state is infeasible).
LoadedConfig load_config_text(std::string_view text);
LoadedConfig load_config(const std::filesystem::path& path);

/// Absolute or existing paths are returned unchanged; bare names are looked
/// up in $TUITION_DYN_SEED_DIR, then ./configs.
std::filesystem::path resolve_config_path(const std::string& name);

/// Full document with every value explicit, so reloading gives an identical
/// SimConfig.
std::string to_document(const LoadedConfig& config);

}  // namespace tuition
