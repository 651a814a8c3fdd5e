// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "gpd/core.hpp"

namespace gpd {

// Uniform hash-grid over a fixed point list. Immutable after construction;
// radius queries return exactly the ids within distance r (closed ball).
class SpatialIndex {
 public:
  SpatialIndex() = default;
  // cell_size <= 0 picks a size from the cloud's bounding box and count
  explicit SpatialIndex(const std::vector<Vec3>& points, double cell_size = 0.0);

  std::vector<int> radius_indices(const Vec3& p, double r) const;
  void radius_indices(const Vec3& p, double r, std::vector<int>& out) const;

  // ids of the k nearest neighbors of p, excluding exclude_id (pass -1 to
  // keep all); ordered nearest first
  std::vector<int> knn(const Vec3& p, int k, int exclude_id = -1) const;

  std::size_t size() const { return points_.size(); }
  const std::vector<Vec3>& points() const { return points_; }
  double cell_size() const { return cell_; }

 private:
  std::int64_t cell_key(int cx, int cy, int cz) const;
  void cell_of(const Vec3& p, int& cx, int& cy, int& cz) const;

  std::vector<Vec3> points_;
  double cell_ = 1.0;
  std::unordered_map<std::int64_t, std::vector<int>> cells_;
};

}  // namespace gpd
