// SPDX-License-Identifier: Apache-2.0
#include "gpd/frames.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace gpd {

std::optional<DarbouxFrame> compute_frame(const ViewpointCloud& cloud,
                                          const SpatialIndex& index,
                                          int point_id, double r) {
  if (r <= 0) throw std::invalid_argument("radius must be positive");
  if (!cloud.has_normals()) return std::nullopt;

  const Vec3& p = cloud.points[point_id];
  std::vector<int> ids;
  index.radius_indices(p, r, ids);

  Mat3 outer = Mat3::Zero();
  std::vector<int> valid_ids;
  valid_ids.reserve(ids.size());
  for (int id : ids) {
    if (!cloud.normal_valid[id]) continue;
    const Vec3& n = cloud.normals[id];
    outer += n * n.transpose();
    valid_ids.push_back(id);
  }
  if (valid_ids.size() < 3) return std::nullopt;

  Eigen::SelfAdjointEigenSolver<Mat3> eig(outer);
  const Mat3 vecs = eig.eigenvectors();  // eigenvalues ascending
  const Vec3 vals = eig.eigenvalues();

  // alignment of each eigenvector with the neighborhood normals
  double align[3] = {0, 0, 0};
  for (int id : valid_ids)
    for (int k = 0; k < 3; ++k) align[k] += std::abs(cloud.normals[id].dot(vecs.col(k)));

  int normal_idx = 0;
  for (int k = 1; k < 3; ++k)
    if (align[k] > align[normal_idx]) normal_idx = k;
  int a = (normal_idx + 1) % 3, b = (normal_idx + 2) % 3;
  int minor_idx = align[a] <= align[b] ? a : b;

  DarbouxFrame frame;
  frame.origin = p;
  frame.normal_axis = vecs.col(normal_idx);
  Vec3 to_view = cloud.viewpoint_of(point_id) - p;
  if (frame.normal_axis.dot(to_view) < 0) frame.normal_axis = -frame.normal_axis;

  double lambda_max = vals.maxCoeff();
  double curvature_gap = std::abs(vals[a] - vals[b]) / std::max(lambda_max, 1e-300);
  if (curvature_gap < 1e-3) {
    // plane-degenerate: the tangent eigenpair is arbitrary, pick the tangent
    // direction closest to global +z (fall back to +x)
    Vec3 n = frame.normal_axis;
    Vec3 cand = Vec3::UnitZ() - Vec3::UnitZ().dot(n) * n;
    if (cand.norm() < 1e-9) cand = Vec3::UnitX() - Vec3::UnitX().dot(n) * n;
    frame.minor_axis = cand.normalized();
  } else {
    frame.minor_axis = vecs.col(minor_idx);
    // orient the minor axis by the neighborhood's first position moment so
    // the frame rotates with the data instead of the eigensolver's sign whim
    double moment = 0;
    for (int id : valid_ids) moment += (cloud.points[id] - p).dot(frame.minor_axis);
    if (moment < 0) frame.minor_axis = -frame.minor_axis;
  }
  // re-orthogonalize against the (possibly flipped) normal
  frame.minor_axis =
      (frame.minor_axis - frame.minor_axis.dot(frame.normal_axis) * frame.normal_axis)
          .normalized();
  frame.major_axis = frame.minor_axis.cross(frame.normal_axis);
  return frame;
}

}  // namespace gpd
