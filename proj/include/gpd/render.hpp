// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "gpd/cloud.hpp"
#include "gpd/mesh.hpp"

namespace gpd {

// Pinhole camera, optical axis +z forward, image x right / y down.
struct Camera {
  RigidTransform pose;  // camera-to-world
  double fx = 300, fy = 300, cx = 160, cy = 120;
  int width = 320, height = 240;
  double near = 0.05, far = 10.0;

  void validate() const;
  Vec3 position() const { return pose.translation; }
  // pinhole projection of a world point; false when behind the camera
  bool project(const Vec3& world, double& u, double& v) const;
};

Camera make_camera_looking_at(const Vec3& eye, const Vec3& target,
                              const Camera& intrinsics_template = Camera{});

struct NoiseModel {
  double depth_sigma = 0.0;   // Gaussian noise along the ray, meters
  double dropout_prob = 0.0;  // i.i.d. chance of discarding a hit
  std::uint64_t seed = 0;
};

struct RenderResult {
  ViewpointCloud cloud;
  std::vector<int> triangle_ids;  // hit triangle per point
};

// Casts one ray per pixel (exact triangle intersection, nearest hit with
// camera depth in [near, far]), back-projects hits and orients normals
// toward the camera. Noise is applied along the ray, then dropout.
RenderResult render_view_full(const TriangleMesh& mesh, const Camera& camera,
                              const NoiseModel& noise = NoiseModel{});

ViewpointCloud render_view(const TriangleMesh& mesh, const Camera& camera,
                           const NoiseModel& noise = NoiseModel{});

// Two cameras on a sphere of the given radius around `center`, separated by
// exactly `separation` radians along a great circle, both looking at the
// center. The merged cloud keeps two viewpoint entries.
ViewpointCloud render_registered_pair(const TriangleMesh& mesh,
                                      const Vec3& center, double radius,
                                      double separation,
                                      const NoiseModel& noise = NoiseModel{},
                                      double base_azimuth = 0.0,
                                      double elevation = 0.6,
                                      const Camera& intrinsics = Camera{});

RenderResult render_registered_pair_full(const TriangleMesh& mesh,
                                         const Vec3& center, double radius,
                                         double separation,
                                         const NoiseModel& noise = NoiseModel{},
                                         double base_azimuth = 0.0,
                                         double elevation = 0.6,
                                         const Camera& intrinsics = Camera{});

}  // namespace gpd
