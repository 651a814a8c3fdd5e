// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "gpd/cloud.hpp"
#include "gpd/frames.hpp"
#include "gpd/spatial_index.hpp"

namespace gpd {

// Parametric two-finger hand. All lengths in meters.
struct HandGeometry {
  double aperture = 0.07;          // max separation between finger inner faces
  double min_width = 0.03;         // smallest graspable surface width
  double finger_thickness = 0.01;
  double finger_depth = 0.06;      // finger length along the approach axis
  double hand_height = 0.02;       // extent along the hand z axis
  double base_depth = 0.02;        // palm block behind the fingers

  void validate() const;
  double outer_half_width() const { return aperture / 2 + finger_thickness; }
};

// Hand frame convention: x = approach axis pointing from the palm toward the
// object, y = closing axis, z = hand axis. Fingers span local x in
// [0, finger_depth] (tips at +finger_depth), the palm block spans local x in
// [-base_depth, 0].
struct HandPose {
  RigidTransform frame;
  // provenance of the sampling grid search
  double grid_y = 0.0;
  double grid_phi = 0.0;
  double x_star = 0.0;
};

enum class PhiAxis { frame_z, frame_x };

// Places the hand at offsets (x, y) in the Darboux frame's coordinates with
// a rotation of phi about the chosen frame axis. x runs along the outward
// normal, so larger x means further retracted from the surface. The returned
// frame is the grid frame rotated half a turn about its z axis, which points
// the hand's approach axis at the surface.
HandPose make_grid_pose(const DarbouxFrame& frame, double x, double y,
                        double phi, PhiAxis axis = PhiAxis::frame_z);

// The three body volumes (two fingers and the palm block) in world frame.
std::vector<OrientedBox> body_boxes(const HandGeometry& geom,
                                    const HandPose& pose);

// Volume swept by the fingers when they close.
OrientedBox closing_box(const HandGeometry& geom, const HandPose& pose);

// True iff any cloud point lies strictly inside any body box.
bool in_collision(const HandGeometry& geom, const HandPose& pose,
                  const ViewpointCloud& cloud, const SpatialIndex& index);
// Same test restricted to the given candidate ids (used by the push search).
bool in_collision_ids(const HandGeometry& geom, const HandPose& pose,
                      const std::vector<Vec3>& points,
                      const std::vector<int>& candidate_ids);

// Ids of cloud points inside the closing region (closed test).
std::vector<int> closing_points(const HandGeometry& geom, const HandPose& pose,
                                const ViewpointCloud& cloud);

// Ids from candidate_ids that fall inside the closing region (closed test).
std::vector<int> closing_points_ids(const HandGeometry& geom,
                                    const HandPose& pose,
                                    const std::vector<Vec3>& points,
                                    const std::vector<int>& candidate_ids);

// Slides the hand toward the surface along the frame's negative-x direction
// in increments of step, starting fully retracted at x = finger_depth + step.
// Returns the smallest collision-free x reached before the first colliding
// step (search floor 0), or nullopt when even the start pose collides.
// sweep_ids, when given, receives the spatial prefilter covering the whole
// sweep; it is a superset of any point the hand volumes can touch.
std::optional<double> push_forward(const HandGeometry& geom,
                                   const DarbouxFrame& frame, double y,
                                   double phi, const ViewpointCloud& cloud,
                                   const SpatialIndex& index,
                                   double step = 0.001,
                                   PhiAxis axis = PhiAxis::frame_z,
                                   std::vector<int>* sweep_ids = nullptr);

// Extent of the closing-region points along the closing axis. Throws when
// the closing region is empty.
double grasp_width(const HandGeometry& geom, const HandPose& pose,
                   const ViewpointCloud& cloud);

}  // namespace gpd
