// SPDX-License-Identifier: Apache-2.0
#include "gpd/hand.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace gpd {

void HandGeometry::validate() const {
  if (aperture <= 0 || min_width <= 0 || finger_thickness <= 0 ||
      finger_depth <= 0 || hand_height <= 0 || base_depth <= 0)
    throw std::invalid_argument("hand dimensions must be positive");
  if (min_width >= aperture)
    throw std::invalid_argument("min_width must be smaller than aperture");
}

HandPose make_grid_pose(const DarbouxFrame& frame, double x, double y,
                        double phi, PhiAxis axis) {
  Mat3 grid_rot = frame.rotation();
  grid_rot = grid_rot * (axis == PhiAxis::frame_z ? rot_z(phi) : rot_x(phi));
  HandPose pose;
  // half turn about z: approach axis = negative outward normal
  pose.frame.rotation = grid_rot * rot_z(M_PI);
  pose.frame.translation = frame.origin + frame.rotation() * Vec3(x, y, 0);
  pose.grid_y = y;
  pose.grid_phi = phi;
  pose.x_star = x;
  return pose;
}

namespace {

struct LocalBox {
  Vec3 lo, hi;
};

// body volumes in the hand frame
std::array<LocalBox, 3> local_body_boxes(const HandGeometry& g) {
  double w_in = g.aperture / 2;
  double w_out = g.outer_half_width();
  double hh = g.hand_height / 2;
  return {LocalBox{{0, -w_out, -hh}, {g.finger_depth, -w_in, hh}},
          LocalBox{{0, w_in, -hh}, {g.finger_depth, w_out, hh}},
          LocalBox{{-g.base_depth, -w_out, -hh}, {0, w_out, hh}}};
}

LocalBox local_closing_box(const HandGeometry& g) {
  return {{0, -g.aperture / 2, -g.hand_height / 2},
          {g.finger_depth, g.aperture / 2, g.hand_height / 2}};
}

OrientedBox to_world(const LocalBox& b, const HandPose& pose) {
  OrientedBox box;
  box.half_extents = 0.5 * (b.hi - b.lo);
  box.rotation = pose.frame.rotation;
  box.center = pose.frame.apply(0.5 * (b.hi + b.lo));
  return box;
}

bool inside_strict(const LocalBox& b, const Vec3& local) {
  return local.x() > b.lo.x() && local.x() < b.hi.x() && local.y() > b.lo.y() &&
         local.y() < b.hi.y() && local.z() > b.lo.z() && local.z() < b.hi.z();
}

bool inside_closed(const LocalBox& b, const Vec3& local) {
  return local.x() >= b.lo.x() && local.x() <= b.hi.x() &&
         local.y() >= b.lo.y() && local.y() <= b.hi.y() &&
         local.z() >= b.lo.z() && local.z() <= b.hi.z();
}

// sphere that contains every body box, in the hand frame
void bounding_sphere(const HandGeometry& g, const HandPose& pose, Vec3& center,
                     double& radius) {
  Vec3 lo(-g.base_depth, -g.outer_half_width(), -g.hand_height / 2);
  Vec3 hi(g.finger_depth, g.outer_half_width(), g.hand_height / 2);
  center = pose.frame.apply(0.5 * (lo + hi));
  radius = (0.5 * (hi - lo)).norm();
}

}  // namespace

std::vector<OrientedBox> body_boxes(const HandGeometry& geom,
                                    const HandPose& pose) {
  auto locals = local_body_boxes(geom);
  return {to_world(locals[0], pose), to_world(locals[1], pose),
          to_world(locals[2], pose)};
}

OrientedBox closing_box(const HandGeometry& geom, const HandPose& pose) {
  return to_world(local_closing_box(geom), pose);
}

bool in_collision_ids(const HandGeometry& geom, const HandPose& pose,
                      const std::vector<Vec3>& points,
                      const std::vector<int>& candidate_ids) {
  auto locals = local_body_boxes(geom);
  Mat3 rot_t = pose.frame.rotation.transpose();
  for (int id : candidate_ids) {
    Vec3 local = rot_t * (points[id] - pose.frame.translation);
    for (const auto& b : locals)
      if (inside_strict(b, local)) return true;
  }
  return false;
}

bool in_collision(const HandGeometry& geom, const HandPose& pose,
                  const ViewpointCloud& cloud, const SpatialIndex& index) {
  Vec3 center;
  double radius;
  bounding_sphere(geom, pose, center, radius);
  std::vector<int> ids;
  index.radius_indices(center, radius, ids);
  return in_collision_ids(geom, pose, cloud.points, ids);
}

std::vector<int> closing_points(const HandGeometry& geom, const HandPose& pose,
                                const ViewpointCloud& cloud) {
  LocalBox box = local_closing_box(geom);
  Mat3 rot_t = pose.frame.rotation.transpose();
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(cloud.points.size()); ++i) {
    Vec3 local = rot_t * (cloud.points[i] - pose.frame.translation);
    if (inside_closed(box, local)) out.push_back(i);
  }
  return out;
}

std::vector<int> closing_points_ids(const HandGeometry& geom,
                                    const HandPose& pose,
                                    const std::vector<Vec3>& points,
                                    const std::vector<int>& candidate_ids) {
  LocalBox box = local_closing_box(geom);
  Mat3 rot_t = pose.frame.rotation.transpose();
  std::vector<int> out;
  for (int id : candidate_ids) {
    Vec3 local = rot_t * (points[id] - pose.frame.translation);
    if (inside_closed(box, local)) out.push_back(id);
  }
  return out;
}

std::optional<double> push_forward(const HandGeometry& geom,
                                   const DarbouxFrame& frame, double y,
                                   double phi, const ViewpointCloud& cloud,
                                   const SpatialIndex& index, double step,
                                   PhiAxis axis, std::vector<int>* sweep_ids) {
  if (step <= 0) throw std::invalid_argument("step must be positive");
  double start = geom.finger_depth + step;

  // one conservative spatial query covering the whole sweep
  HandPose probe = make_grid_pose(frame, start, y, phi, axis);
  Vec3 center;
  double radius;
  bounding_sphere(geom, probe, center, radius);
  std::vector<int> local_ids;
  std::vector<int>& ids = sweep_ids ? *sweep_ids : local_ids;
  index.radius_indices(center, radius + start, ids);

  int n_steps = static_cast<int>(std::floor(start / step + 1e-9));
  std::optional<double> best;
  for (int i = 0; i <= n_steps; ++i) {
    double x = start - i * step;
    HandPose pose = make_grid_pose(frame, x, y, phi, axis);
    if (in_collision_ids(geom, pose, cloud.points, ids)) break;
    best = x;
  }
  return best;
}

double grasp_width(const HandGeometry& geom, const HandPose& pose,
                   const ViewpointCloud& cloud) {
  auto ids = closing_points(geom, pose, cloud);
  if (ids.empty()) throw std::runtime_error("empty closing region");
  Mat3 rot_t = pose.frame.rotation.transpose();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int id : ids) {
    double y = (rot_t * (cloud.points[id] - pose.frame.translation)).y();
    lo = std::min(lo, y);
    hi = std::max(hi, y);
  }
  return hi - lo;
}

}  // namespace gpd
