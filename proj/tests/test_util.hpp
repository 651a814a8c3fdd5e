// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>

#include "gpd/cloud.hpp"
#include "gpd/rng.hpp"

namespace gpd::test {

inline std::string temp_path(const std::string& name) {
  static const auto dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("gpdkit_tests_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return (dir / name).string();
}

// regular grid on the z=0 plane, observed from above
inline ViewpointCloud plane_grid_cloud(int nx, int ny, double spacing,
                                       double viewpoint_height = 1.0) {
  ViewpointCloud cloud;
  cloud.viewpoints.emplace_back(0, 0, viewpoint_height);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      cloud.points.emplace_back((i - (nx - 1) / 2.0) * spacing,
                                (j - (ny - 1) / 2.0) * spacing, 0.0);
      cloud.vp_index.push_back(0);
    }
  return cloud;
}

// points on a full sphere, analytic normals, observed from far outside
inline ViewpointCloud sphere_cloud(double radius, int count,
                                   std::uint64_t seed = 7,
                                   const Vec3& center = Vec3::Zero()) {
  ViewpointCloud cloud;
  cloud.viewpoints.emplace_back(center + Vec3(0, 0, 10 * radius));
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    double z = rng.uniform(-1, 1);
    double a = rng.uniform(0, 2 * M_PI);
    double r_xy = std::sqrt(std::max(0.0, 1 - z * z));
    Vec3 dir(r_xy * std::cos(a), r_xy * std::sin(a), z);
    cloud.points.push_back(center + radius * dir);
    cloud.normals.push_back(dir);
    cloud.normal_valid.push_back(1);
    cloud.vp_index.push_back(0);
  }
  return cloud;
}

// lateral surface of a cylinder along the z axis, analytic normals,
// observed from the +x side
inline ViewpointCloud cylinder_cloud(double radius, double height, int count,
                                     std::uint64_t seed = 11) {
  ViewpointCloud cloud;
  cloud.viewpoints.emplace_back(10 * radius + 1.0, 0, 0);
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    double a = rng.uniform(0, 2 * M_PI);
    double z = rng.uniform(-height / 2, height / 2);
    Vec3 n(std::cos(a), std::sin(a), 0);
    cloud.points.emplace_back(radius * n.x(), radius * n.y(), z);
    cloud.normals.push_back(n);
    cloud.normal_valid.push_back(1);
    cloud.vp_index.push_back(0);
  }
  return cloud;
}

inline ViewpointCloud random_box_cloud(int count, std::uint64_t seed,
                                       double extent = 0.2) {
  ViewpointCloud cloud;
  cloud.viewpoints.emplace_back(0, 0, 1.0);
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    cloud.points.emplace_back(rng.uniform(-extent, extent),
                              rng.uniform(-extent, extent),
                              rng.uniform(-extent, extent));
    cloud.vp_index.push_back(0);
  }
  return cloud;
}

inline Mat3 random_rotation(Rng& rng) {
  // Gram-Schmidt on random Gaussian vectors
  Vec3 a(rng.gaussian(), rng.gaussian(), rng.gaussian());
  Vec3 b(rng.gaussian(), rng.gaussian(), rng.gaussian());
  a.normalize();
  b = (b - b.dot(a) * a).normalized();
  Mat3 r;
  r.col(0) = a;
  r.col(1) = b;
  r.col(2) = a.cross(b);
  return r;
}

inline double angle_between(const Vec3& a, const Vec3& b) {
  double c = a.normalized().dot(b.normalized());
  return std::acos(std::clamp(c, -1.0, 1.0));
}

// angle between lines (sign-agnostic)
inline double axis_angle_between(const Vec3& a, const Vec3& b) {
  double c = std::abs(a.normalized().dot(b.normalized()));
  return std::acos(std::clamp(c, 0.0, 1.0));
}

constexpr double deg = M_PI / 180.0;

}  // namespace gpd::test
