// SPDX-License-Identifier: Apache-2.0
#include "gpd/render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gpd/parallel.hpp"
#include "gpd/rng.hpp"

namespace gpd {

void Camera::validate() const {
  if (fx <= 0 || fy <= 0 || width <= 0 || height <= 0)
    throw std::invalid_argument("camera intrinsics must be positive");
  if (near >= far) throw std::invalid_argument("near must be < far");
}

bool Camera::project(const Vec3& world, double& u, double& v) const {
  Vec3 local = pose.apply_inverse(world);
  if (local.z() <= 0) return false;
  u = fx * local.x() / local.z() + cx;
  v = fy * local.y() / local.z() + cy;
  return true;
}

Camera make_camera_looking_at(const Vec3& eye, const Vec3& target,
                              const Camera& intrinsics_template) {
  Camera cam = intrinsics_template;
  Vec3 forward = (target - eye).normalized();
  Vec3 up = Vec3::UnitZ();
  if (std::abs(forward.dot(up)) > 0.999) up = Vec3::UnitX();
  Vec3 right = forward.cross(up).normalized();
  Vec3 down = forward.cross(right);  // image rows grow downward
  cam.pose.rotation.col(0) = right;
  cam.pose.rotation.col(1) = down;
  cam.pose.rotation.col(2) = forward;
  cam.pose.translation = eye;
  return cam;
}

namespace {

// Moller-Trumbore; returns ray parameter t (over a unit direction) or -1.
double ray_triangle(const Vec3& origin, const Vec3& dir, const Vec3& a,
                    const Vec3& b, const Vec3& c) {
  const double eps = 1e-12;
  Vec3 e1 = b - a, e2 = c - a;
  Vec3 pvec = dir.cross(e2);
  double det = e1.dot(pvec);
  if (std::abs(det) < eps) return -1;
  double inv_det = 1.0 / det;
  Vec3 tvec = origin - a;
  double u = tvec.dot(pvec) * inv_det;
  if (u < 0 || u > 1) return -1;
  Vec3 qvec = tvec.cross(e1);
  double v = dir.dot(qvec) * inv_det;
  if (v < 0 || u + v > 1) return -1;
  double t = e2.dot(qvec) * inv_det;
  return t > eps ? t : -1;
}

}  // namespace

RenderResult render_view_full(const TriangleMesh& mesh, const Camera& camera,
                              const NoiseModel& noise) {
  camera.validate();
  const Vec3 origin = camera.position();
  const Mat3 rot = camera.pose.rotation;
  const Mat3 rot_t = rot.transpose();
  const int w = camera.width, h = camera.height;

  // Bin triangles to the pixels whose center rays can hit them. The image
  // footprint of a triangle with all vertices in front of the camera is the
  // convex hull of the projected vertices, so its padded bounding rectangle
  // is a conservative pixel set and per-pixel results match brute force.
  std::vector<std::vector<int>> bins(static_cast<std::size_t>(w) * h);
  for (int t = 0; t < static_cast<int>(mesh.triangles.size()); ++t) {
    const auto& tri = mesh.triangles[t];
    double min_u = std::numeric_limits<double>::infinity(), max_u = -min_u;
    double min_v = min_u, max_v = -min_u;
    bool in_front = true;
    for (int k = 0; k < 3 && in_front; ++k) {
      Vec3 local = rot_t * (mesh.vertices[tri[k]] - origin);
      if (local.z() < 1e-9) {
        in_front = false;
        break;
      }
      double u = camera.fx * local.x() / local.z() + camera.cx;
      double v = camera.fy * local.y() / local.z() + camera.cy;
      min_u = std::min(min_u, u);
      max_u = std::max(max_u, u);
      min_v = std::min(min_v, v);
      max_v = std::max(max_v, v);
    }
    int u0 = 0, u1 = w - 1, v0 = 0, v1 = h - 1;
    if (in_front) {
      u0 = std::max(0, static_cast<int>(std::floor(min_u - 1.5)));
      u1 = std::min(w - 1, static_cast<int>(std::ceil(max_u + 0.5)));
      v0 = std::max(0, static_cast<int>(std::floor(min_v - 1.5)));
      v1 = std::min(h - 1, static_cast<int>(std::ceil(max_v + 0.5)));
      if (u0 > u1 || v0 > v1) continue;
    }
    for (int v = v0; v <= v1; ++v)
      for (int u = u0; u <= u1; ++u)
        bins[static_cast<std::size_t>(v) * w + u].push_back(t);
  }

  struct Hit {
    Vec3 point;
    Vec3 normal;
    int triangle = -1;
  };
  std::vector<Hit> hits(static_cast<std::size_t>(w) * h);

  parallel_for(0, static_cast<std::size_t>(h), [&](std::size_t row) {
    for (int u = 0; u < w; ++u) {
      std::size_t pix = row * w + u;
      if (bins[pix].empty()) continue;
      Vec3 dir_cam((u + 0.5 - camera.cx) / camera.fx,
                   (row + 0.5 - camera.cy) / camera.fy, 1.0);
      double cam_z_per_t = 1.0 / dir_cam.norm();
      Vec3 dir = (rot * dir_cam).normalized();
      double best_t = std::numeric_limits<double>::infinity();
      int best_tri = -1;
      for (int t : bins[pix]) {
        const auto& tri = mesh.triangles[t];
        double hit_t = ray_triangle(origin, dir, mesh.vertices[tri[0]],
                                    mesh.vertices[tri[1]], mesh.vertices[tri[2]]);
        if (hit_t < 0) continue;
        double depth = hit_t * cam_z_per_t;
        if (depth < camera.near || depth > camera.far) continue;
        if (hit_t < best_t) {
          best_t = hit_t;
          best_tri = t;
        }
      }
      if (best_tri < 0) continue;
      double t_len = best_t;
      if (noise.depth_sigma > 0) {
        Rng rng = Rng::stream(noise.seed, pix);
        t_len += noise.depth_sigma * rng.gaussian();
      }
      if (noise.dropout_prob > 0) {
        Rng rng = Rng::stream(noise.seed ^ 0x5bf03635ULL, pix);
        if (rng.bernoulli(noise.dropout_prob)) continue;
      }
      Hit& hit = hits[pix];
      hit.point = origin + t_len * dir;
      Vec3 n = mesh.triangle_normal(best_tri);
      if (n.dot(origin - hit.point) < 0) n = -n;
      hit.normal = n;
      hit.triangle = best_tri;
    }
  });

  RenderResult res;
  res.cloud.viewpoints.push_back(origin);
  for (const auto& hit : hits) {
    if (hit.triangle < 0) continue;
    res.cloud.points.push_back(hit.point);
    res.cloud.normals.push_back(hit.normal);
    res.cloud.normal_valid.push_back(1);
    res.cloud.vp_index.push_back(0);
    res.triangle_ids.push_back(hit.triangle);
  }
  return res;
}

ViewpointCloud render_view(const TriangleMesh& mesh, const Camera& camera,
                           const NoiseModel& noise) {
  return render_view_full(mesh, camera, noise).cloud;
}

RenderResult render_registered_pair_full(const TriangleMesh& mesh,
                                         const Vec3& center, double radius,
                                         double separation,
                                         const NoiseModel& noise,
                                         double base_azimuth, double elevation,
                                         const Camera& intrinsics) {
  if (radius <= 0) throw std::invalid_argument("radius must be positive");
  Vec3 v0(std::cos(elevation) * std::cos(base_azimuth),
          std::cos(elevation) * std::sin(base_azimuth), std::sin(elevation));
  // rotate v0 by `separation` along the great circle through the horizontal
  // tangent so the angular gap is exact
  Vec3 tangent = Vec3::UnitZ().cross(v0);
  if (tangent.norm() < 1e-12) tangent = Vec3::UnitX();
  tangent.normalize();
  Vec3 v1 = std::cos(separation) * v0 + std::sin(separation) * tangent;

  RenderResult merged;
  for (int k = 0; k < 2; ++k) {
    const Vec3& dir = k == 0 ? v0 : v1;
    Camera cam = make_camera_looking_at(center + radius * dir, center, intrinsics);
    NoiseModel view_noise = noise;
    view_noise.seed = noise.seed * 2 + k;
    RenderResult part = render_view_full(mesh, cam, view_noise);
    merged.cloud.append(part.cloud);
    merged.triangle_ids.insert(merged.triangle_ids.end(),
                               part.triangle_ids.begin(),
                               part.triangle_ids.end());
  }
  return merged;
}

ViewpointCloud render_registered_pair(const TriangleMesh& mesh,
                                      const Vec3& center, double radius,
                                      double separation,
                                      const NoiseModel& noise,
                                      double base_azimuth, double elevation,
                                      const Camera& intrinsics) {
  return render_registered_pair_full(mesh, center, radius, separation, noise,
                                     base_azimuth, elevation, intrinsics)
      .cloud;
}

}  // namespace gpd
