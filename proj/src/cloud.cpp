// SPDX-License-Identifier: Apache-2.0
#include "gpd/cloud.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>

#include "gpd/parallel.hpp"
#include "gpd/spatial_index.hpp"

namespace gpd {

void ViewpointCloud::validate() const {
  if (vp_index.size() != points.size())
    throw std::runtime_error("vp_index length does not match point count");
  if (!normals.empty() && normals.size() != points.size())
    throw std::runtime_error("normals length does not match point count");
  if (!normals.empty() && normal_valid.size() != normals.size())
    throw std::runtime_error("normal_valid length does not match normals");
  for (int idx : vp_index)
    if (idx < 0 || idx >= static_cast<int>(viewpoints.size()))
      throw std::runtime_error("vp_index " + std::to_string(idx) +
                               " out of range for " +
                               std::to_string(viewpoints.size()) + " viewpoints");
}

Aabb ViewpointCloud::bounds() const {
  Aabb b;
  if (points.empty()) return b;
  b.lo = b.hi = points[0];
  for (const auto& p : points) {
    b.lo = b.lo.cwiseMin(p);
    b.hi = b.hi.cwiseMax(p);
  }
  return b;
}

void ViewpointCloud::append(const ViewpointCloud& other) {
  std::size_t old_size = points.size();
  int vp_base = static_cast<int>(viewpoints.size());
  viewpoints.insert(viewpoints.end(), other.viewpoints.begin(),
                    other.viewpoints.end());
  points.insert(points.end(), other.points.begin(), other.points.end());
  for (int idx : other.vp_index) vp_index.push_back(idx + vp_base);
  if (!normals.empty() || !other.normals.empty()) {
    // pad whichever side lacks normals with invalid entries
    normals.resize(old_size, Vec3::Zero());
    normal_valid.resize(old_size, 0);
    if (!other.normals.empty()) {
      normals.insert(normals.end(), other.normals.begin(), other.normals.end());
      normal_valid.insert(normal_valid.end(), other.normal_valid.begin(),
                          other.normal_valid.end());
    } else {
      normals.resize(points.size(), Vec3::Zero());
      normal_valid.resize(points.size(), 0);
    }
  }
}

void save_cloud(const ViewpointCloud& cloud, const std::string& path) {
  cloud.validate();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.precision(10);
  out << "GPC 1\n";
  out << "COUNT " << cloud.points.size() << '\n';
  out << "VIEWPOINTS " << cloud.viewpoints.size() << '\n';
  for (const auto& v : cloud.viewpoints)
    out << v.x() << ' ' << v.y() << ' ' << v.z() << '\n';
  bool with_normals = cloud.has_normals();
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    const Vec3& p = cloud.points[i];
    Vec3 n = Vec3::Zero();
    bool valid = false;
    if (with_normals) {
      valid = cloud.normal_valid[i] != 0;
      if (valid) n = cloud.normals[i];
    }
    out << p.x() << ' ' << p.y() << ' ' << p.z() << ' ' << n.x() << ' '
        << n.y() << ' ' << n.z() << ' ' << cloud.vp_index[i];
    if (!valid) out << " *";
    out << '\n';
  }
}

ViewpointCloud load_cloud(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  int lineno = 0;
  auto get_line = [&]() -> std::string& {
    if (!std::getline(in, line))
      throw std::runtime_error(path + ":" + std::to_string(lineno + 1) +
                               ": unexpected EOF");
    ++lineno;
    return line;
  };
  auto fail = [&](const std::string& what) -> void {
    throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + what);
  };

  if (get_line() != "GPC 1") fail("bad magic, expected 'GPC 1'");
  std::size_t count = 0, n_vp = 0;
  {
    std::istringstream ss(get_line());
    std::string tag;
    if (!(ss >> tag >> count) || tag != "COUNT") fail("bad COUNT line");
  }
  {
    std::istringstream ss(get_line());
    std::string tag;
    if (!(ss >> tag >> n_vp) || tag != "VIEWPOINTS") fail("bad VIEWPOINTS line");
  }
  ViewpointCloud cloud;
  cloud.viewpoints.reserve(n_vp);
  for (std::size_t i = 0; i < n_vp; ++i) {
    std::istringstream ss(get_line());
    double x, y, z;
    if (!(ss >> x >> y >> z)) fail("bad viewpoint record");
    cloud.viewpoints.emplace_back(x, y, z);
  }
  cloud.points.reserve(count);
  cloud.normals.reserve(count);
  cloud.normal_valid.reserve(count);
  cloud.vp_index.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::istringstream ss(get_line());
    double x, y, z, nx, ny, nz;
    int vp;
    if (!(ss >> x >> y >> z >> nx >> ny >> nz >> vp))
      fail("point record needs 7 fields");
    std::string flag;
    bool valid = true;
    if (ss >> flag) {
      if (flag == "*") valid = false;
      else fail("unexpected trailing field '" + flag + "'");
    }
    if (vp < 0 || vp >= static_cast<int>(n_vp))
      fail("vp_index " + std::to_string(vp) + " out of range");
    cloud.points.emplace_back(x, y, z);
    cloud.normals.emplace_back(nx, ny, nz);
    cloud.normal_valid.push_back(valid ? 1 : 0);
    cloud.vp_index.push_back(vp);
  }
  return cloud;
}

namespace {

std::int64_t leaf_key(const Vec3& p, double leaf) {
  auto cell = [&](double v) {
    return static_cast<std::int64_t>(
        static_cast<std::uint32_t>(static_cast<int>(std::floor(v / leaf))) &
        0x1fffff);
  };
  return cell(p.x()) | (cell(p.y()) << 21) | (cell(p.z()) << 42);
}

}  // namespace

ViewpointCloud voxel_downsample(const ViewpointCloud& cloud, double leaf) {
  if (leaf <= 0) throw std::invalid_argument("leaf must be positive");
  cloud.validate();

  struct Cell {
    Vec3 pos_sum = Vec3::Zero();
    Vec3 normal_sum = Vec3::Zero();
    int count = 0;
    int normal_count = 0;
    std::map<int, int> vp_votes;
  };
  std::map<std::int64_t, Cell> cells;  // ordered: deterministic output order
  bool with_normals = cloud.has_normals();
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    Cell& c = cells[leaf_key(cloud.points[i], leaf)];
    c.pos_sum += cloud.points[i];
    c.count += 1;
    c.vp_votes[cloud.vp_index[i]] += 1;
    if (with_normals && cloud.normal_valid[i]) {
      c.normal_sum += cloud.normals[i];
      c.normal_count += 1;
    }
  }

  ViewpointCloud out;
  out.viewpoints = cloud.viewpoints;
  for (const auto& [key, c] : cells) {
    (void)key;
    out.points.push_back(c.pos_sum / c.count);
    int best_vp = -1, best_votes = -1;
    for (const auto& [vp, votes] : c.vp_votes) {
      if (votes > best_votes) {  // map order makes ties pick the lowest index
        best_votes = votes;
        best_vp = vp;
      }
    }
    out.vp_index.push_back(best_vp);
    if (with_normals) {
      double len = c.normal_sum.norm();
      if (c.normal_count > 0 && len > 1e-12) {
        out.normals.push_back(c.normal_sum / len);
        out.normal_valid.push_back(1);
      } else {
        out.normals.push_back(Vec3::Zero());
        out.normal_valid.push_back(0);
      }
    }
  }
  return out;
}

ViewpointCloud remove_outliers(const ViewpointCloud& cloud, int k, double mult) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  cloud.validate();
  std::size_t n = cloud.points.size();
  if (n < static_cast<std::size_t>(k) + 1) return cloud;

  SpatialIndex index(cloud.points);
  std::vector<double> mean_dist(n);
  parallel_for(0, n, [&](std::size_t i) {
    auto ids = index.knn(cloud.points[i], k, static_cast<int>(i));
    double sum = 0;
    for (int id : ids) sum += (cloud.points[id] - cloud.points[i]).norm();
    mean_dist[i] = sum / ids.size();
  });

  double mean = 0;
  for (double d : mean_dist) mean += d;
  mean /= n;
  double var = 0;
  for (double d : mean_dist) var += (d - mean) * (d - mean);
  double stddev = std::sqrt(var / n);
  double cutoff = mean + mult * stddev;

  ViewpointCloud out;
  out.viewpoints = cloud.viewpoints;
  bool with_normals = cloud.has_normals();
  for (std::size_t i = 0; i < n; ++i) {
    if (mean_dist[i] > cutoff) continue;
    out.points.push_back(cloud.points[i]);
    out.vp_index.push_back(cloud.vp_index[i]);
    if (with_normals) {
      out.normals.push_back(cloud.normals[i]);
      out.normal_valid.push_back(cloud.normal_valid[i]);
    }
  }
  return out;
}

ViewpointCloud estimate_normals(const ViewpointCloud& cloud, double r) {
  if (r <= 0) throw std::invalid_argument("radius must be positive");
  cloud.validate();
  if (cloud.viewpoints.empty())
    throw std::runtime_error("normal estimation needs viewpoints for orientation");

  ViewpointCloud out = cloud;
  std::size_t n = cloud.points.size();
  out.normals.assign(n, Vec3::Zero());
  out.normal_valid.assign(n, 0);
  SpatialIndex index(cloud.points, r);

  parallel_for(0, n, [&](std::size_t i) {
    std::vector<int> ids;
    index.radius_indices(cloud.points[i], r, ids);
    if (ids.size() < 3) return;  // flagged invalid
    Vec3 mean = Vec3::Zero();
    for (int id : ids) mean += cloud.points[id];
    mean /= static_cast<double>(ids.size());
    Mat3 cov = Mat3::Zero();
    for (int id : ids) {
      Vec3 d = cloud.points[id] - mean;
      cov += d * d.transpose();
    }
    Eigen::SelfAdjointEigenSolver<Mat3> eig(cov);
    Vec3 normal = eig.eigenvectors().col(0);  // minor eigenvector
    Vec3 to_view = cloud.viewpoint_of(i) - cloud.points[i];
    if (normal.dot(to_view) < 0) normal = -normal;
    out.normals[i] = normal;
    out.normal_valid[i] = 1;
  });
  return out;
}

}  // namespace gpd
