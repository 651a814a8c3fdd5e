// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "gpd/mesh.hpp"

namespace gpd {

// Axis-aligned solid box centered at the origin.
TriangleMesh make_box(const Vec3& extents);

// Closed cylinder along the z axis, centered at the origin.
TriangleMesh make_cylinder(double radius, double height, int segments = 48);

// Icosphere; subdivisions >= 0 (0 = icosahedron).
TriangleMesh make_icosphere(double radius, int subdivisions);

// Single rectangle in the x-y plane (normal +z), two triangles.
TriangleMesh make_rectangle(double size_x, double size_y);

}  // namespace gpd
