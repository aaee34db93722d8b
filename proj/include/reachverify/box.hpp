#pragma once

#include <Eigen/Dense>

#include "reachverify/interval.hpp"

namespace rv {

/// Axis-aligned box stored as per-dimension (center, radius). This is the
/// "scope vector" layout the learned operator consumes and produces;
/// bounds are derived as lb_i = c_i - r_i, ub_i = c_i + r_i.
class IntervalBox {
 public:
  IntervalBox() = default;

  IntervalBox(Eigen::VectorXd centers, Eigen::VectorXd radii)
      : centers_(std::move(centers)), radii_(std::move(radii)) {
    require(centers_.size() == radii_.size(), ErrorCode::DimensionMismatch,
            "centers/radii size mismatch");
    require((radii_.array() >= 0.0).all(), ErrorCode::InvalidArgument, "negative box radius");
  }

  static IntervalBox from_bounds(const Eigen::VectorXd& lb, const Eigen::VectorXd& ub) {
    require(lb.size() == ub.size(), ErrorCode::DimensionMismatch, "lb/ub size mismatch");
    require((lb.array() <= ub.array()).all(), ErrorCode::InvalidArgument,
            "box bounds out of order");
    return IntervalBox(0.5 * (lb + ub), 0.5 * (ub - lb));
  }

  static IntervalBox point(const Eigen::VectorXd& p) {
    return IntervalBox(p, Eigen::VectorXd::Zero(p.size()));
  }

  Eigen::Index dim() const { return centers_.size(); }
  const Eigen::VectorXd& centers() const { return centers_; }
  const Eigen::VectorXd& radii() const { return radii_; }

  double lb(Eigen::Index i) const { return centers_[i] - radii_[i]; }
  double ub(Eigen::Index i) const { return centers_[i] + radii_[i]; }
  Eigen::VectorXd lower() const { return centers_ - radii_; }
  Eigen::VectorXd upper() const { return centers_ + radii_; }
  Interval interval(Eigen::Index i) const { return Interval(lb(i), ub(i)); }

  bool contains(const Eigen::VectorXd& p, double tol = 0.0) const {
    require(p.size() == dim(), ErrorCode::DimensionMismatch, "point dimension mismatch");
    return ((p - centers_).array().abs() <= radii_.array() + tol).all();
  }

  bool contains(const IntervalBox& other, double tol = 0.0) const {
    require(other.dim() == dim(), ErrorCode::DimensionMismatch, "box dimension mismatch");
    for (Eigen::Index i = 0; i < dim(); ++i) {
      if (other.lb(i) < lb(i) - tol || other.ub(i) > ub(i) + tol) return false;
    }
    return true;
  }

 private:
  Eigen::VectorXd centers_;
  Eigen::VectorXd radii_;
};

inline IntervalBox hull(const IntervalBox& a, const IntervalBox& b) {
  require(a.dim() == b.dim(), ErrorCode::DimensionMismatch, "box dimension mismatch");
  return IntervalBox::from_bounds(a.lower().cwiseMin(b.lower()), a.upper().cwiseMax(b.upper()));
}

}  // namespace rv
