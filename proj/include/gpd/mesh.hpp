// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <vector>

#include "gpd/core.hpp"

namespace gpd {

struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;

  Vec3 triangle_normal(std::size_t t) const;  // unit, from winding order
  double triangle_area(std::size_t t) const;
  double total_area() const;
  Aabb bounds() const;

  // throws on out-of-range indices or degenerate triangles (area <= 1e-12 m^2)
  void validate() const;

  void transform(const RigidTransform& tf);
};

// ASCII OBJ (v/f, triangles only) or ASCII PLY, chosen by file extension.
// Malformed input raises std::runtime_error carrying the line number.
TriangleMesh load_mesh(const std::string& path);

void save_mesh_obj(const TriangleMesh& mesh, const std::string& path);
void save_mesh_ply(const TriangleMesh& mesh, const std::string& path);

// Merges parts into one mesh; triangle_owner[i] = index of the part that
// contributed triangle i (used to map ray hits back to scene objects).
TriangleMesh merge_meshes(const std::vector<TriangleMesh>& parts,
                          std::vector<int>* triangle_owner = nullptr);

}  // namespace gpd
