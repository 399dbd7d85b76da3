#include "linclon/error.hpp"

namespace linclon {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::BadDegree: return "BadDegree";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::EmptyProduct: return "EmptyProduct";
    case ErrorKind::WrongLength: return "WrongLength";
    case ErrorKind::InvalidElement: return "InvalidElement";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::BadFactorCount: return "BadFactorCount";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotSupportedOnLines: return "NotSupportedOnLines";
    case ErrorKind::ValueMismatch: return "ValueMismatch";
    case ErrorKind::NotAbsorbing: return "NotAbsorbing";
    case ErrorKind::BadArity: return "BadArity";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::MixedDomains: return "MixedDomains";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::StrategyMismatch: return "StrategyMismatch";
    case ErrorKind::Malformed: return "Malformed";
  }
  return "Unknown";
}

}  // namespace linclon
