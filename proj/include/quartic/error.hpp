#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quartic {

enum class ErrorKind {
  NotPrime,
  FieldTooLarge,
  InvalidModulus,
  InvalidGenerator,
  InvalidElement,
  DivisionByZero,
  FieldMismatch,
  ZeroHasNoIndex,
  NotInPrimeSubfield,
  ZeroCoefficient,
  NotDivisible,
  WrongResidueClass,
  BadOrder,
  NonIntegral,
  TooLarge,
  ZeroRHS,
  QuarticY,
  BadDenominator,
  ResidualTooLarge,
  NotNearInteger,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::InvalidModulus: return "InvalidModulus";
    case ErrorKind::InvalidGenerator: return "InvalidGenerator";
    case ErrorKind::InvalidElement: return "InvalidElement";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ZeroHasNoIndex: return "ZeroHasNoIndex";
    case ErrorKind::NotInPrimeSubfield: return "NotInPrimeSubfield";
    case ErrorKind::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::WrongResidueClass: return "WrongResidueClass";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ZeroRHS: return "ZeroRHS";
    case ErrorKind::QuarticY: return "QuarticY";
    case ErrorKind::BadDenominator: return "BadDenominator";
    case ErrorKind::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorKind::NotNearInteger: return "NotNearInteger";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace quartic
