#pragma once

#include <stdexcept>
#include <string>

namespace tuition {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

enum class FailureKind { college_collapse, degenerate_market, pricing, facilities, lookup_range, internal };

const char* to_string(FailureKind kind);

/// A model equation left its domain (empty college, zero denominators, ...).
/// `time` is filled in by the engine when the failure escapes a step.
class SimulationError : public std::runtime_error {
 public:
  SimulationError(FailureKind kind, const std::string& what, double time = -1.0);
  FailureKind kind() const noexcept { return kind_; }
  double time() const noexcept { return time_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  FailureKind kind_;
  double time_;
  std::string detail_;
};

}  // namespace tuition
