// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpd/core.hpp"

namespace gpd {

// Point cloud paired with the camera positions that observed it and a
// per-point map onto those positions.
struct ViewpointCloud {
  std::vector<Vec3> points;
  std::vector<Vec3> normals;           // empty or same length as points
  std::vector<std::uint8_t> normal_valid;  // parallel to normals
  std::vector<Vec3> viewpoints;
  std::vector<int> vp_index;           // per point, into viewpoints

  std::size_t size() const { return points.size(); }
  bool has_normals() const { return !normals.empty(); }
  Vec3 viewpoint_of(std::size_t i) const { return viewpoints[vp_index[i]]; }

  // structural invariants (lengths, index ranges); throws on violation
  void validate() const;

  Aabb bounds() const;

  // Appends other's points; viewpoint lists are concatenated.
  void append(const ViewpointCloud& other);
};

// GPC ASCII format:
//   GPC 1
//   COUNT <n>
//   VIEWPOINTS <k>
//   k lines: vx vy vz
//   n lines: x y z nx ny nz vp [*]   (* marks an invalid normal, nx ny nz = 0)
void save_cloud(const ViewpointCloud& cloud, const std::string& path);
ViewpointCloud load_cloud(const std::string& path);

// One output point per occupied leaf cell: member centroid, mode vp_index
// (ties to the lowest index), averaged renormalized normals.
ViewpointCloud voxel_downsample(const ViewpointCloud& cloud, double leaf);

// Statistical k-NN filter: drops points whose mean distance to their k
// nearest neighbors exceeds global mean + mult * stddev. Clouds of size
// <= k are returned unchanged.
ViewpointCloud remove_outliers(const ViewpointCloud& cloud, int k = 20,
                               double mult = 1.0);

// Covariance minor eigenvector over the r-ball, oriented toward the point's
// viewpoint. Points with fewer than 3 ball members get an invalid flag.
ViewpointCloud estimate_normals(const ViewpointCloud& cloud, double r = 0.01);

}  // namespace gpd
