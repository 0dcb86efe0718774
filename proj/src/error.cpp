#include "windrose/error.hpp"

namespace windrose {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTotalExceeds100: return "TotalExceeds100";
    case ErrorCode::kNegativeCell: return "NegativeCell";
    case ErrorCode::kBadGeometry: return "BadGeometry";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kNegativeWeight: return "NegativeWeight";
    case ErrorCode::kDegenerateCell: return "DegenerateCell";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kCompatModeUnavailable: return "CompatModeUnavailable";
    case ErrorCode::kSameClass: return "SameClass";
    case ErrorCode::kOddClassCount: return "OddClassCount";
    case ErrorCode::kBadOptions: return "BadOptions";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace windrose
