// SPDX-License-Identifier: Apache-2.0
#include "gpd/spatial_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gpd {

SpatialIndex::SpatialIndex(const std::vector<Vec3>& points, double cell_size)
    : points_(points) {
  if (cell_size > 0) {
    cell_ = cell_size;
  } else if (!points_.empty()) {
    Vec3 lo = points_[0], hi = points_[0];
    for (const auto& p : points_) {
      lo = lo.cwiseMin(p);
      hi = hi.cwiseMax(p);
    }
    double diag = (hi - lo).norm();
    // aim for a few points per cell on typical surface clouds
    double target = diag / std::max(4.0, std::cbrt(static_cast<double>(points_.size())) * 2.0);
    cell_ = target > 0 ? target : 1.0;
  }
  cells_.reserve(points_.size());
  for (int i = 0; i < static_cast<int>(points_.size()); ++i) {
    int cx, cy, cz;
    cell_of(points_[i], cx, cy, cz);
    cells_[cell_key(cx, cy, cz)].push_back(i);
  }
}

std::int64_t SpatialIndex::cell_key(int cx, int cy, int cz) const {
  // pack three 21-bit signed coordinates
  auto pack = [](int v) {
    return static_cast<std::int64_t>(static_cast<std::uint32_t>(v) & 0x1fffff);
  };
  return pack(cx) | (pack(cy) << 21) | (pack(cz) << 42);
}

void SpatialIndex::cell_of(const Vec3& p, int& cx, int& cy, int& cz) const {
  cx = static_cast<int>(std::floor(p.x() / cell_));
  cy = static_cast<int>(std::floor(p.y() / cell_));
  cz = static_cast<int>(std::floor(p.z() / cell_));
}

void SpatialIndex::radius_indices(const Vec3& p, double r,
                                  std::vector<int>& out) const {
  out.clear();
  if (points_.empty() || r < 0) return;
  int lox, loy, loz, hix, hiy, hiz;
  cell_of(p - Vec3(r, r, r), lox, loy, loz);
  cell_of(p + Vec3(r, r, r), hix, hiy, hiz);
  double r2 = r * r;
  for (int cx = lox; cx <= hix; ++cx)
    for (int cy = loy; cy <= hiy; ++cy)
      for (int cz = loz; cz <= hiz; ++cz) {
        auto it = cells_.find(cell_key(cx, cy, cz));
        if (it == cells_.end()) continue;
        for (int id : it->second)
          if ((points_[id] - p).squaredNorm() <= r2) out.push_back(id);
      }
}

std::vector<int> SpatialIndex::radius_indices(const Vec3& p, double r) const {
  std::vector<int> out;
  radius_indices(p, r, out);
  return out;
}

std::vector<int> SpatialIndex::knn(const Vec3& p, int k, int exclude_id) const {
  std::vector<int> found;
  if (points_.empty() || k <= 0) return found;
  double r = cell_;
  // grow the search radius until k hits fit strictly inside it
  while (true) {
    radius_indices(p, r, found);
    if (exclude_id >= 0)
      std::erase(found, exclude_id);
    if (static_cast<int>(found.size()) >= k) {
      std::sort(found.begin(), found.end(), [&](int a, int b) {
        double da = (points_[a] - p).squaredNorm();
        double db = (points_[b] - p).squaredNorm();
        return da != db ? da < db : a < b;
      });
      double kth = (points_[found[k - 1]] - p).norm();
      if (kth <= r) {
        found.resize(k);
        return found;
      }
    }
    if (static_cast<int>(found.size()) >= static_cast<int>(points_.size()) -
                                              (exclude_id >= 0 ? 1 : 0)) {
      std::sort(found.begin(), found.end(), [&](int a, int b) {
        double da = (points_[a] - p).squaredNorm();
        double db = (points_[b] - p).squaredNorm();
        return da != db ? da < db : a < b;
      });
      if (static_cast<int>(found.size()) > k) found.resize(k);
      return found;
    }
    r *= 2.0;
  }
}

}  // namespace gpd
