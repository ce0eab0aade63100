#include "qhurwitz/core/error.hpp"

namespace qhurwitz {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NonInvertibleSeries: return "NonInvertibleSeries";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ZeroColengthProfile: return "ZeroColengthProfile";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::PrecisionLoss: return "PrecisionLoss";
    case ErrorCode::VanishingFactor: return "VanishingFactor";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::PoleProximity: return "PoleProximity";
    case ErrorCode::WrongRegion: return "WrongRegion";
    case ErrorCode::PolePoint: return "PolePoint";
    case ErrorCode::ContourTooShort: return "ContourTooShort";
    case ErrorCode::NonRealResult: return "NonRealResult";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

void raise(ErrorCode code, const std::string& detail) {
  throw Error(code, std::string(error_name(code)) + ": " + detail);
}

}  // namespace qhurwitz
