#pragma once

#include <stdexcept>
#include <string>

namespace windrose {

enum class ErrorCode {
  kTotalExceeds100,
  kNegativeCell,
  kBadGeometry,
  kEmptyInput,
  kNegativeWeight,
  kDegenerateCell,
  kDimensionMismatch,
  kCompatModeUnavailable,
  kSameClass,
  kOddClassCount,
  kBadOptions,
  kParse,
  kIo,
};

const char* to_string(ErrorCode code);

// All library failures are reported through this type; the code drives the
// CLI exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace windrose
