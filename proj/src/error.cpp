#include "credal/error.hpp"

namespace credal {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::EmptyLabel: return "EmptyLabel";
    case ErrorKind::FrameTooLarge: return "FrameTooLarge";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::DuplicateSubset: return "DuplicateSubset";
    case ErrorKind::MassOutOfRange: return "MassOutOfRange";
    case ErrorKind::MassSumNotOne: return "MassSumNotOne";
    case ErrorKind::FrameMismatch: return "FrameMismatch";
    case ErrorKind::NotAMassFunction: return "NotAMassFunction";
    case ErrorKind::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorKind::EmptyContext: return "EmptyContext";
    case ErrorKind::DuplicateContext: return "DuplicateContext";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotSingleton: return "NotSingleton";
    case ErrorKind::ZeroImplicability: return "ZeroImplicability";
    case ErrorKind::OverlappingContextSets: return "OverlappingContextSets";
    case ErrorKind::NonPositiveTime: return "NonPositiveTime";
    case ErrorKind::NegativeTime: return "NegativeTime";
    case ErrorKind::InvalidFraction: return "InvalidFraction";
    case ErrorKind::InvalidDecayRate: return "InvalidDecayRate";
    case ErrorKind::NotSingletonCover: return "NotSingletonCover";
    case ErrorKind::NonPositiveKappa: return "NonPositiveKappa";
    case ErrorKind::UnknownScheme: return "UnknownScheme";
    case ErrorKind::UnsupportedContext: return "UnsupportedContext";
  }
  return "Unknown";
}

}  // namespace credal
