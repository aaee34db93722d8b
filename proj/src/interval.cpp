#include "reachverify/interval.hpp"

#include <numbers>

namespace rv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double clamp_unit(double v) { return std::fmin(1.0, std::fmax(-1.0, v)); }

}  // namespace

// Endpoint values plus interior critical points. cos peaks at even multiples
// of pi, troughs at odd multiples; sin at pi/2 + k*pi with sign (-1)^k.
Interval cos(const Interval& x) {
  if (x.width() >= kTwoPi) return Interval(-1.0, 1.0);
  double lo = std::fmin(std::cos(x.lb), std::cos(x.ub));
  double hi = std::fmax(std::cos(x.lb), std::cos(x.ub));
  const long kmin = static_cast<long>(std::ceil(x.lb / kPi));
  const long kmax = static_cast<long>(std::floor(x.ub / kPi));
  for (long k = kmin; k <= kmax; ++k) {
    if ((k % 2) == 0) {
      hi = 1.0;
    } else {
      lo = -1.0;
    }
  }
  return Interval(clamp_unit(lo), clamp_unit(hi));
}

Interval sin(const Interval& x) {
  if (x.width() >= kTwoPi) return Interval(-1.0, 1.0);
  double lo = std::fmin(std::sin(x.lb), std::sin(x.ub));
  double hi = std::fmax(std::sin(x.lb), std::sin(x.ub));
  const long kmin = static_cast<long>(std::ceil((x.lb - 0.5 * kPi) / kPi));
  const long kmax = static_cast<long>(std::floor((x.ub - 0.5 * kPi) / kPi));
  for (long k = kmin; k <= kmax; ++k) {
    if (((k % 2) + 2) % 2 == 0) {
      hi = 1.0;
    } else {
      lo = -1.0;
    }
  }
  return Interval(clamp_unit(lo), clamp_unit(hi));
}

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DivisorContainsZero: return "DivisorContainsZero";
    case ErrorCode::SpeedBelowGuard: return "SpeedBelowGuard";
    case ErrorCode::HeadingRangeTooWide: return "HeadingRangeTooWide";
    case ErrorCode::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::DatasetEmpty: return "DatasetEmpty";
    case ErrorCode::NonFiniteLoss: return "NonFiniteLoss";
    case ErrorCode::FormatVersionMismatch: return "FormatVersionMismatch";
    case ErrorCode::CorruptFile: return "CorruptFile";
    case ErrorCode::PlacementFailed: return "PlacementFailed";
    case ErrorCode::NonPositiveGap: return "NonPositiveGap";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace rv
