#include "nestsub/error.hpp"

namespace nestsub {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SingularPivot: return "SingularPivot";
    case ErrorCode::SingularU: return "SingularU";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DegenerateDegrees: return "DegenerateDegrees";
    case ErrorCode::BadChain: return "BadChain";
    case ErrorCode::VanishingLeading: return "VanishingLeading";
    case ErrorCode::LayoutUnresolved: return "LayoutUnresolved";
    case ErrorCode::Incomplete: return "Incomplete";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantBreach: return "InvariantBreach";
  }
  return "Unknown";
}

}  // namespace nestsub
