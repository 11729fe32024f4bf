#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace credal {

enum class ErrorKind {
  DuplicateLabel,
  EmptyLabel,
  FrameTooLarge,
  UnknownLabel,
  DuplicateSubset,
  MassOutOfRange,
  MassSumNotOne,
  FrameMismatch,
  NotAMassFunction,
  AlphaOutOfRange,
  EmptyContext,
  DuplicateContext,
  NotNormal,
  NotSingleton,
  ZeroImplicability,
  OverlappingContextSets,
  NonPositiveTime,
  NegativeTime,
  InvalidFraction,
  InvalidDecayRate,
  NotSingletonCover,
  NonPositiveKappa,
  UnknownScheme,
  UnsupportedContext,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers can branch
// on it; `detail` holds the offending numeric value where one exists
// (e.g. the sum deviation for MassSumNotOne).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, double detail = 0.0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  double detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  double detail_;
};

}  // namespace credal
