#include "fracdim/error.hpp"

namespace fracdim {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedInterval: return "MalformedInterval";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NonPositiveScale: return "NonPositiveScale";
    case ErrorCode::CenterNotInSet: return "CenterNotInSet";
    case ErrorCode::ScaleOrderViolation: return "ScaleOrderViolation";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::RatioOutOfRange: return "RatioOutOfRange";
    case ErrorCode::HorizonExceeded: return "HorizonExceeded";
    case ErrorCode::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::DecayViolation: return "DecayViolation";
    case ErrorCode::EmptyRatios: return "EmptyRatios";
    case ErrorCode::TooFewScales: return "TooFewScales";
    case ErrorCode::NotAutonomous: return "NotAutonomous";
    case ErrorCode::ExponentMismatch: return "ExponentMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace fracdim
