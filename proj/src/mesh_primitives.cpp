// SPDX-License-Identifier: Apache-2.0
#include "gpd/mesh_primitives.hpp"

#include <cmath>
#include <map>

namespace gpd {

TriangleMesh make_box(const Vec3& extents) {
  double x = extents.x() / 2, y = extents.y() / 2, z = extents.z() / 2;
  TriangleMesh m;
  m.vertices = {{-x, -y, -z}, {x, -y, -z}, {x, y, -z}, {-x, y, -z},
                {-x, -y, z},  {x, -y, z},  {x, y, z},  {-x, y, z}};
  // outward winding per face
  m.triangles = {{0, 2, 1}, {0, 3, 2},   // -z
                 {4, 5, 6}, {4, 6, 7},   // +z
                 {0, 1, 5}, {0, 5, 4},   // -y
                 {2, 3, 7}, {2, 7, 6},   // +y
                 {1, 2, 6}, {1, 6, 5},   // +x
                 {3, 0, 4}, {3, 4, 7}};  // -x
  return m;
}

TriangleMesh make_cylinder(double radius, double height, int segments) {
  TriangleMesh m;
  double h = height / 2;
  for (int i = 0; i < segments; ++i) {
    double a = 2.0 * M_PI * i / segments;
    m.vertices.emplace_back(radius * std::cos(a), radius * std::sin(a), -h);
    m.vertices.emplace_back(radius * std::cos(a), radius * std::sin(a), h);
  }
  int bottom_center = static_cast<int>(m.vertices.size());
  m.vertices.emplace_back(0, 0, -h);
  int top_center = bottom_center + 1;
  m.vertices.emplace_back(0, 0, h);
  for (int i = 0; i < segments; ++i) {
    int j = (i + 1) % segments;
    int b0 = 2 * i, t0 = 2 * i + 1, b1 = 2 * j, t1 = 2 * j + 1;
    m.triangles.push_back({b0, b1, t1});  // side, outward
    m.triangles.push_back({b0, t1, t0});
    m.triangles.push_back({bottom_center, b1, b0});  // -z cap
    m.triangles.push_back({top_center, t0, t1});     // +z cap
  }
  return m;
}

TriangleMesh make_icosphere(double radius, int subdivisions) {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> verts = {
      {-1, t, 0}, {1, t, 0},   {-1, -t, 0}, {1, -t, 0},
      {0, -1, t}, {0, 1, t},   {0, -1, -t}, {0, 1, -t},
      {t, 0, -1}, {t, 0, 1},   {-t, 0, -1}, {-t, 0, 1}};
  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (auto& v : verts) v.normalize();

  for (int s = 0; s < subdivisions; ++s) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      Vec3 v = (verts[a] + verts[b]).normalized();
      verts.push_back(v);
      int idx = static_cast<int>(verts.size()) - 1;
      midpoint[key] = idx;
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      int ab = mid(f[0], f[1]), bc = mid(f[1], f[2]), ca = mid(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }

  TriangleMesh m;
  m.vertices.reserve(verts.size());
  for (const auto& v : verts) m.vertices.push_back(v * radius);
  m.triangles = faces;
  return m;
}

TriangleMesh make_rectangle(double size_x, double size_y) {
  double x = size_x / 2, y = size_y / 2;
  TriangleMesh m;
  m.vertices = {{-x, -y, 0}, {x, -y, 0}, {x, y, 0}, {-x, y, 0}};
  m.triangles = {{0, 1, 2}, {0, 2, 3}};  // normal +z
  return m;
}

}  // namespace gpd
