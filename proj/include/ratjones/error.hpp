#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ratjones {

enum class ErrorKind {
  // domain errors: the caller supplied an input outside an operation's contract
  InvalidArgument,
  NotReduced,
  NotAKnot,
  BadParity,
  OddPower,
  NonReal,
  NotC0,
  NotPivotEquivalent,
  // internal invariant violations: reaching one of these means a bug
  Overflow,
  NotDivisible,
  IntegralityViolation,
  NoWitness,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for the kinds that signal a broken internal invariant rather than bad input.
bool is_internal(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ratjones
