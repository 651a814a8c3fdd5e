// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <stdexcept>

namespace gpd {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

struct RigidTransform {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  Vec3 apply(const Vec3& p) const { return rotation * p + translation; }
  Vec3 apply_inverse(const Vec3& p) const {
    return rotation.transpose() * (p - translation);
  }
  RigidTransform compose(const RigidTransform& other) const {
    return {rotation * other.rotation, rotation * other.translation + translation};
  }
  RigidTransform inverse() const {
    return {rotation.transpose(), -(rotation.transpose() * translation)};
  }
  // orthonormal with determinant +1
  bool is_valid(double tol = 1e-6) const {
    Mat3 should_be_identity = rotation.transpose() * rotation;
    return (should_be_identity - Mat3::Identity()).cwiseAbs().maxCoeff() < tol &&
           std::abs(rotation.determinant() - 1.0) < tol;
  }
};

struct Aabb {
  Vec3 lo = Vec3::Zero();
  Vec3 hi = Vec3::Zero();

  bool contains(const Vec3& p) const {
    return p.x() >= lo.x() && p.x() <= hi.x() && p.y() >= lo.y() &&
           p.y() <= hi.y() && p.z() >= lo.z() && p.z() <= hi.z();
  }
  Vec3 center() const { return 0.5 * (lo + hi); }
  Vec3 extents() const { return hi - lo; }
};

struct OrientedBox {
  Vec3 center = Vec3::Zero();
  Vec3 half_extents = Vec3::Zero();
  Mat3 rotation = Mat3::Identity();  // box axes as columns, world frame

  // strict: boundary points do not count as inside
  bool contains(const Vec3& p, bool strict = true) const {
    Vec3 local = rotation.transpose() * (p - center);
    if (strict) {
      return std::abs(local.x()) < half_extents.x() &&
             std::abs(local.y()) < half_extents.y() &&
             std::abs(local.z()) < half_extents.z();
    }
    return std::abs(local.x()) <= half_extents.x() &&
           std::abs(local.y()) <= half_extents.y() &&
           std::abs(local.z()) <= half_extents.z();
  }
  double bounding_radius() const { return half_extents.norm(); }
};

// Rotation about a principal axis, used for grid poses and scene layout.
inline Mat3 rot_x(double a) {
  return Eigen::AngleAxisd(a, Vec3::UnitX()).toRotationMatrix();
}
inline Mat3 rot_y(double a) {
  return Eigen::AngleAxisd(a, Vec3::UnitY()).toRotationMatrix();
}
inline Mat3 rot_z(double a) {
  return Eigen::AngleAxisd(a, Vec3::UnitZ()).toRotationMatrix();
}

}  // namespace gpd
