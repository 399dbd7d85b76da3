#pragma once

#include <stdexcept>
#include <string>

namespace linclon {

enum class ErrorKind {
  NotPrime,
  Reducible,
  BadDegree,
  DivisionByZero,
  EmptyProduct,
  WrongLength,
  InvalidElement,
  ShapeMismatch,
  BadFactorCount,
  NotCoprime,
  NotSupportedOnLines,
  ValueMismatch,
  NotAbsorbing,
  BadArity,
  BudgetExceeded,
  BadRange,
  MixedDomains,
  NotInvariant,
  StrategyMismatch,
  Malformed,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace linclon
