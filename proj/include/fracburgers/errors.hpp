#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracburgers {

/// Raised when a computation breaks a numerical contract (as opposed to
/// receiving bad input, which raises std::invalid_argument / std::domain_error).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal identity between two algebraic routes failed to hold.
class ConsistencyError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class CflViolation : public NumericalError {
 public:
  CflViolation(std::size_t node, std::size_t step, double number, double limit);

  std::size_t node() const noexcept { return node_; }
  std::size_t step() const noexcept { return step_; }
  double number() const noexcept { return number_; }
  double limit() const noexcept { return limit_; }

 private:
  std::size_t node_;
  std::size_t step_;
  double number_;
  double limit_;
};

/// The blow-up ladder never left the escape threshold before the horizon.
class NoBlowupDetected : public std::runtime_error {
 public:
  explicit NoBlowupDetected(double horizon);

  double horizon() const noexcept { return horizon_; }

 private:
  double horizon_;
};

}  // namespace fracburgers
