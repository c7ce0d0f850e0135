#include "tropocalc/error.hpp"

namespace tropo {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByTropicalZero: return "DivisionByTropicalZero";
    case ErrorCode::IndeterminateValue: return "IndeterminateValue";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::AmbientDimUnsupported: return "AmbientDimUnsupported";
    case ErrorCode::InvalidCycle: return "InvalidCycle";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::GenusZero: return "GenusZero";
    case ErrorCode::NonZeroDegree: return "NonZeroDegree";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::UnmarkedLeaf: return "UnmarkedLeaf";
    case ErrorCode::NotTrivalent: return "NotTrivalent";
    case ErrorCode::NonGenericConfiguration: return "NonGenericConfiguration";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace tropo
