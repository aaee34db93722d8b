#pragma once

#include <cmath>

#include "reachverify/errors.hpp"

namespace rv {

/// Closed interval [lb, ub]. Arithmetic is inclusion isotone: the result
/// contains f(x) for every x drawn from the operands. No directed rounding;
/// enclosures are exact up to ordinary double rounding.
struct Interval {
  double lb = 0.0;
  double ub = 0.0;

  Interval() = default;
  Interval(double point) : lb(point), ub(point) {}  // NOLINT: implicit by design
  Interval(double lo, double hi) : lb(lo), ub(hi) {
    require(lo <= hi, ErrorCode::InvalidArgument, "interval bounds out of order");
  }

  static Interval from_center_radius(double c, double r) {
    require(r >= 0.0, ErrorCode::InvalidArgument, "negative interval radius");
    return Interval(c - r, c + r);
  }

  double center() const { return 0.5 * (lb + ub); }
  double radius() const { return 0.5 * (ub - lb); }
  double width() const { return ub - lb; }
  bool contains(double x, double tol = 0.0) const { return x >= lb - tol && x <= ub + tol; }
  bool contains(const Interval& other, double tol = 0.0) const {
    return other.lb >= lb - tol && other.ub <= ub + tol;
  }
};

inline Interval operator-(const Interval& a) { return Interval(-a.ub, -a.lb); }

inline Interval operator+(const Interval& a, const Interval& b) {
  return Interval(a.lb + b.lb, a.ub + b.ub);
}

inline Interval operator-(const Interval& a, const Interval& b) {
  return Interval(a.lb - b.ub, a.ub - b.lb);
}

inline Interval operator*(const Interval& a, const Interval& b) {
  const double p1 = a.lb * b.lb, p2 = a.lb * b.ub, p3 = a.ub * b.lb, p4 = a.ub * b.ub;
  return Interval(std::fmin(std::fmin(p1, p2), std::fmin(p3, p4)),
                  std::fmax(std::fmax(p1, p2), std::fmax(p3, p4)));
}

inline Interval operator/(const Interval& a, const Interval& b) {
  require(!(b.lb <= 0.0 && b.ub >= 0.0), ErrorCode::DivisorContainsZero,
          "denominator interval spans zero");
  const double p1 = a.lb / b.lb, p2 = a.lb / b.ub, p3 = a.ub / b.lb, p4 = a.ub / b.ub;
  return Interval(std::fmin(std::fmin(p1, p2), std::fmin(p3, p4)),
                  std::fmax(std::fmax(p1, p2), std::fmax(p3, p4)));
}

inline Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
inline Interval& operator-=(Interval& a, const Interval& b) { return a = a - b; }

Interval sin(const Interval& x);
Interval cos(const Interval& x);

inline Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::fmin(a.lb, b.lb), std::fmax(a.ub, b.ub));
}

inline Interval abs(const Interval& a) {
  if (a.lb >= 0.0) return a;
  if (a.ub <= 0.0) return -a;
  return Interval(0.0, std::fmax(-a.lb, a.ub));
}

}  // namespace rv
