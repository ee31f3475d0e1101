#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fracdim {

enum class ErrorCode {
  MalformedInterval,
  EmptySet,
  NonPositiveScale,
  CenterNotInSet,
  ScaleOrderViolation,
  TooLarge,
  RatioOutOfRange,
  HorizonExceeded,
  LevelOutOfRange,
  DecayViolation,
  EmptyRatios,
  TooFewScales,
  NotAutonomous,
  ExponentMismatch,
  ParseError,
  InvariantViolation,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fracdim
