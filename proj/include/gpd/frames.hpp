// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "gpd/cloud.hpp"
#include "gpd/spatial_index.hpp"

namespace gpd {

// Local surface frame built from the eigenstructure of the neighborhood
// normals outer-product matrix. Axes are orthonormal and right-handed:
// normal_axis x major_axis = minor_axis.
struct DarbouxFrame {
  Vec3 origin = Vec3::Zero();
  Vec3 normal_axis = Vec3::UnitX();  // outward, toward the observing viewpoint
  Vec3 major_axis = Vec3::UnitY();   // major principal curvature direction
  Vec3 minor_axis = Vec3::UnitZ();   // minor principal curvature direction

  // columns [normal, major, minor] = frame (x, y, z)
  Mat3 rotation() const {
    Mat3 r;
    r.col(0) = normal_axis;
    r.col(1) = major_axis;
    r.col(2) = minor_axis;
    return r;
  }
};

// Accumulates sum of n(q) n(q)^T over valid-normal neighbors in the r-ball
// and eigen-decomposes it. Axes are assigned by measured alignment with the
// neighborhood normals (max |n.v| sum = normal axis, min = minor curvature
// axis) rather than by eigenvalue rank; the normal axis is flipped toward
// the point's viewpoint. Returns nullopt when fewer than 3 valid-normal
// neighbors are available.
//
// Degenerate plane-like patches (the two curvature eigenvalues separated by
// a relative gap < 1e-3) take a deterministic tie-break: the minor axis is
// the in-tangent-plane direction closest to global +z, falling back to +x
// when the tangent plane is orthogonal to +z.
std::optional<DarbouxFrame> compute_frame(const ViewpointCloud& cloud,
                                          const SpatialIndex& index,
                                          int point_id, double r);

}  // namespace gpd
