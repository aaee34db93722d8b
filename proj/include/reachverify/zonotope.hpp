#pragma once

#include <Eigen/Dense>

#include "reachverify/box.hpp"

namespace rv {

/// Centrally symmetric set {c + sum_j alpha_j * g_j | alpha_j in [-1,1]}.
/// Generators are the columns of `generators`; an axis-aligned box is the
/// special case of a diagonal generator matrix.
struct Zonotope {
  Eigen::VectorXd center;
  Eigen::MatrixXd generators;  // dim x g

  Eigen::Index dim() const { return center.size(); }
  Eigen::Index generator_count() const { return generators.cols(); }
};

inline Zonotope box_to_zonotope(const IntervalBox& b) {
  Zonotope z;
  z.center = b.centers();
  z.generators = b.radii().asDiagonal();
  return z;
}

/// Interval hull: radius per dimension is the absolute row sum of the
/// generator matrix.
inline IntervalBox zonotope_to_box(const Zonotope& z) {
  require(z.generators.rows() == z.center.size() || z.generators.size() == 0,
          ErrorCode::DimensionMismatch, "generator rows != dimension");
  Eigen::VectorXd radii = Eigen::VectorXd::Zero(z.center.size());
  if (z.generators.size() > 0) radii = z.generators.cwiseAbs().rowwise().sum();
  return IntervalBox(z.center, radii);
}

/// max of dir . x over x in z; exact and cheap for zonotopes.
inline double support(const Zonotope& z, const Eigen::VectorXd& dir) {
  require(dir.size() == z.dim(), ErrorCode::DimensionMismatch, "direction dimension mismatch");
  double s = dir.dot(z.center);
  if (z.generators.size() > 0) s += (dir.transpose() * z.generators).cwiseAbs().sum();
  return s;
}

}  // namespace rv
