#pragma once

#include <stdexcept>
#include <string>

namespace compflex {

// Invalid run configuration (bad key, bad value, inconsistent fields).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error("config error [" + field + "]: " + message),
        field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Adaptive quadrature failed to reach the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& message, double best_value,
                  double error_estimate, int subdivisions)
      : std::runtime_error(message + " (best=" + std::to_string(best_value) +
                           ", err=" + std::to_string(error_estimate) +
                           ", subdivisions=" + std::to_string(subdivisions) + ")"),
        best_value_(best_value),
        error_estimate_(error_estimate),
        subdivisions_(subdivisions) {}

  double best_value() const noexcept { return best_value_; }
  double error_estimate() const noexcept { return error_estimate_; }
  int subdivisions() const noexcept { return subdivisions_; }

 private:
  double best_value_;
  double error_estimate_;
  int subdivisions_;
};

}  // namespace compflex
