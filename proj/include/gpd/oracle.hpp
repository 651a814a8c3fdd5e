// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "gpd/hand.hpp"
#include "gpd/mesh.hpp"

namespace gpd {

struct OracleParams {
  double perturbation = 0.001;          // contact slab depth, meters
  double normal_angle_tol = 0.35;       // radians, ~20 degrees
  double surface_sample_density = 1e6;  // samples per square meter
  std::uint64_t seed = 0;

  void validate() const;
};

// Area-weighted surface discretization of a mesh; normals come from the
// sampled triangles.
struct SurfaceSamples {
  std::vector<Vec3> points;
  std::vector<Vec3> normals;

  void transform(const RigidTransform& tf);
};

// Deterministic given (density, seed); sample count = round(density * area).
// Throws on zero-area meshes.
SurfaceSamples sample_mesh_surface(const TriangleMesh& mesh, double density,
                                   std::uint64_t seed);

enum class OracleReason { ok, no_contact, width, normals };

struct AntipodalResult {
  bool positive = false;
  OracleReason reason = OracleReason::no_contact;
  double separation = 0.0;  // first-contact separation along the closing axis
};

// Frictionless antipodal test for a parallel-jaw closing motion.
//
// Closing happens along the hand frame's y axis. Among surface samples in
// the closing region, each finger's first contact is the extremal sample it
// meets (minimum y for the finger closing from -y, maximum y for the one
// from +y). Each contact is widened into a slab of depth `perturbation`
// along y, standing in for the paper-style vertex-perturbation robustness.
// The grasp is positive iff both slabs exist, their separation fits
// [min_width, aperture], and each slab holds a sample whose normal is within
// normal_angle_tol of the closing axis pointing toward its finger.
AntipodalResult label_antipodal(const HandPose& pose, const HandGeometry& geom,
                                const SurfaceSamples& samples,
                                const OracleParams& params);

}  // namespace gpd
