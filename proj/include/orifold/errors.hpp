#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace orifold {

// Base for every error raised by the library. The CLI maps all of these to
// exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input lies outside the domain of an operation. `parameter()` names the
// offending field ("theta", "beta", "h", ...).
class DomainError : public Error {
 public:
  DomainError(std::string parameter, const std::string& what)
      : Error(parameter + ": " + what), parameter_(std::move(parameter)) {}

  const std::string& parameter() const noexcept { return parameter_; }

 private:
  std::string parameter_;
};

// The equilibrium denominator vanishes: tan(theta/2) == mu.
class SingularityError : public DomainError {
 public:
  SingularityError(double critical_theta_deg, const std::string& what)
      : DomainError("theta", what), critical_theta_deg_(critical_theta_deg) {}

  double critical_theta_deg() const noexcept { return critical_theta_deg_; }

 private:
  double critical_theta_deg_;
};

// A requested target cannot be reached (cable too short, negative tension
// required, fold angle outside the reachable interval).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Malformed or invalid configuration document.
class ConfigError : public Error {
 public:
  enum class Kind { Parse, Schema, Invariant, Value };

  explicit ConfigError(const std::string& what) : ConfigError(Kind::Value, "", what) {}
  ConfigError(Kind kind, std::string field, const std::string& what)
      : Error(what), kind_(kind), field_(std::move(field)) {}

  Kind kind() const noexcept { return kind_; }
  // Dotted path of the offending field, empty for parse errors.
  const std::string& field() const noexcept { return field_; }

 private:
  Kind kind_;
  std::string field_;
};

}  // namespace orifold
