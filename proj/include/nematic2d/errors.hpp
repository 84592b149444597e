#pragma once

#include <stdexcept>
#include <string>

namespace nematic2d {

/// Structural misuse: mismatched grids, bad sizes, invalid arguments.
class StructuralError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Input outside the mathematical domain of an operation (e.g. negative density).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A linear or nonlinear solve failed to reach its tolerance.
class SolverError : public std::runtime_error {
public:
  SolverError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

private:
  double residual_ = 0.0;
};

/// A scheme guarantee (positivity, CFL, constraint) was violated at runtime.
class SchemeViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bad run configuration (missing key, range violation, unknown key).
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace nematic2d
