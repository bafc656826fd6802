#pragma once

#include <stdexcept>
#include <string>

namespace motzeta {

/// Precondition on a mathematical operation was violated (zero vdim, pole at
/// zero, non-invertible constant term, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input data is malformed (bad fan, bad antichain, parse failure).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two computations that must agree did not. Always a bug or a genuine
/// counterexample; never a user error.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exhaustive enumeration would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double required)
      : std::runtime_error(what), required_(required) {}
  double required() const noexcept { return required_; }

 private:
  double required_;
};

}  // namespace motzeta
