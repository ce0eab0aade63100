#pragma once

#include <stdexcept>
#include <string>

namespace qhurwitz {

enum class ErrorCode {
  DivisionByZero,
  NonInvertibleSeries,
  WeightMismatch,
  TooLarge,
  ZeroColengthProfile,
  OrderTooSmall,
  PrecisionLoss,
  VanishingFactor,
  SingularPoint,
  NoConvergence,
  CoincidentPoints,
  PoleProximity,
  WrongRegion,
  PolePoint,
  ContourTooShort,
  NonRealResult,
  InvalidArgument,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& detail);

}  // namespace qhurwitz
