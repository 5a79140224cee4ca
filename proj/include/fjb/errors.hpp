#pragma once

#include <stdexcept>
#include <string>

namespace fjb {

/// A representation parameter or signature violates a standing assumption.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain of a special function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An integral whose convergence precondition fails.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, double exponent_sum, double threshold)
      : std::runtime_error(what), exponent_sum_(exponent_sum), threshold_(threshold) {}

  double exponent_sum() const noexcept { return exponent_sum_; }
  double threshold() const noexcept { return threshold_; }

 private:
  double exponent_sum_;
  double threshold_;
};

/// Quadrature finished but its error estimate exceeds the requested tolerance.
class ToleranceError : public std::runtime_error {
 public:
  ToleranceError(const std::string& what, double value, double err_est)
      : std::runtime_error(what), value_(value), err_est_(err_est) {}

  double value() const noexcept { return value_; }
  double err_est() const noexcept { return err_est_; }

 private:
  double value_;
  double err_est_;
};

class NotInGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace fjb
