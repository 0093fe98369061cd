#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dqp {

/// Input rejected: the message names the violated constraint.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required)
      : std::runtime_error(what), required_(required) {}

  std::uint64_t required() const { return required_; }

 private:
  std::uint64_t required_;
};

/// Two routes that must agree did not. Always a bug, never bad input.
class CheckFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dqp
