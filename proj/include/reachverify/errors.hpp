#pragma once

#include <stdexcept>
#include <string>

namespace rv {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  DivisorContainsZero,
  SpeedBelowGuard,
  HeadingRangeTooWide,
  DegeneratePolygon,
  ConfigInvalid,
  NonFiniteInput,
  DatasetEmpty,
  NonFiniteLoss,
  FormatVersionMismatch,
  CorruptFile,
  PlacementFailed,
  NonPositiveGap,
  LengthMismatch,
  IoError,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception carrying a stable error code; the C API maps codes 1:1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool cond, ErrorCode code, const std::string& message) {
  if (!cond) fail(code, message);
}

}  // namespace rv
