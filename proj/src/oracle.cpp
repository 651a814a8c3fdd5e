// SPDX-License-Identifier: Apache-2.0
#include "gpd/oracle.hpp"

#include <cmath>
#include <limits>

#include "gpd/rng.hpp"

namespace gpd {

void OracleParams::validate() const {
  if (perturbation <= 0) throw std::invalid_argument("perturbation must be positive");
  if (normal_angle_tol <= 0 || normal_angle_tol >= M_PI / 2)
    throw std::invalid_argument("normal_angle_tol must be in (0, pi/2)");
  if (surface_sample_density <= 0)
    throw std::invalid_argument("sample density must be positive");
}

void SurfaceSamples::transform(const RigidTransform& tf) {
  for (auto& p : points) p = tf.apply(p);
  for (auto& n : normals) n = tf.rotation * n;
}

SurfaceSamples sample_mesh_surface(const TriangleMesh& mesh, double density,
                                   std::uint64_t seed) {
  double area = mesh.total_area();
  if (area <= 0) throw std::runtime_error("mesh has zero surface area");
  std::size_t count = static_cast<std::size_t>(std::llround(density * area));
  if (count == 0) count = 1;

  // cumulative area table for area-weighted triangle selection
  std::vector<double> cum(mesh.triangles.size());
  double acc = 0;
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    acc += mesh.triangle_area(t);
    cum[t] = acc;
  }

  Rng rng(seed);
  SurfaceSamples out;
  out.points.reserve(count);
  out.normals.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    double pick = rng.uniform() * acc;
    std::size_t t =
        std::lower_bound(cum.begin(), cum.end(), pick) - cum.begin();
    if (t >= mesh.triangles.size()) t = mesh.triangles.size() - 1;
    const auto& tri = mesh.triangles[t];
    // uniform barycentric draw
    double r1 = std::sqrt(rng.uniform());
    double r2 = rng.uniform();
    double a = 1 - r1, b = r1 * (1 - r2), c = r1 * r2;
    out.points.push_back(a * mesh.vertices[tri[0]] + b * mesh.vertices[tri[1]] +
                         c * mesh.vertices[tri[2]]);
    out.normals.push_back(mesh.triangle_normal(t));
  }
  return out;
}

AntipodalResult label_antipodal(const HandPose& pose, const HandGeometry& geom,
                                const SurfaceSamples& samples,
                                const OracleParams& params) {
  params.validate();
  geom.validate();
  AntipodalResult res;

  Mat3 rot_t = pose.frame.rotation.transpose();
  double half_ap = geom.aperture / 2;
  double half_h = geom.hand_height / 2;

  // samples inside the closing region, as hand-frame (y, normal) pairs
  std::vector<double> ys;
  std::vector<Vec3> local_normals;
  for (std::size_t i = 0; i < samples.points.size(); ++i) {
    Vec3 local = rot_t * (samples.points[i] - pose.frame.translation);
    if (local.x() < 0 || local.x() > geom.finger_depth) continue;
    if (std::abs(local.y()) > half_ap || std::abs(local.z()) > half_h) continue;
    ys.push_back(local.y());
    local_normals.push_back(rot_t * samples.normals[i]);
  }
  if (ys.empty()) {
    res.reason = OracleReason::no_contact;
    return res;
  }

  double contact_lo = std::numeric_limits<double>::infinity();
  double contact_hi = -contact_lo;
  for (double y : ys) {
    contact_lo = std::min(contact_lo, y);
    contact_hi = std::max(contact_hi, y);
  }
  res.separation = contact_hi - contact_lo;
  if (res.separation > geom.aperture || res.separation < geom.min_width) {
    res.reason = OracleReason::width;
    return res;
  }

  // each slab needs a normal antiparallel to the closing motion of its finger
  double cos_tol = std::cos(params.normal_angle_tol);
  bool lo_ok = false, hi_ok = false;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (ys[i] <= contact_lo + params.perturbation &&
        -local_normals[i].y() >= cos_tol)
      lo_ok = true;
    if (ys[i] >= contact_hi - params.perturbation &&
        local_normals[i].y() >= cos_tol)
      hi_ok = true;
    if (lo_ok && hi_ok) break;
  }
  if (lo_ok && hi_ok) {
    res.positive = true;
    res.reason = OracleReason::ok;
  } else {
    res.reason = OracleReason::normals;
  }
  return res;
}

}  // namespace gpd
