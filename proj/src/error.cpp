#include "tropical/error.hpp"

namespace tropical {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownSemiring: return "UnknownSemiring";
    case ErrorCode::InvalidBounds: return "InvalidBounds";
    case ErrorCode::IllegalElement: return "IllegalElement";
    case ErrorCode::StarUndefined: return "StarUndefined";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorCode::NoStabilization: return "NoStabilization";
    case ErrorCode::ShapeViolation: return "ShapeViolation";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::OracleScaleExceeded: return "OracleScaleExceeded";
    case ErrorCode::WrongDescriptor: return "WrongDescriptor";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::EmptyInterval: return "EmptyInterval";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace tropical
