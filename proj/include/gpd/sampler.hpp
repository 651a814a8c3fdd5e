// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

#include "gpd/hand.hpp"

namespace gpd {

struct SamplerConfig {
  int num_samples = 100;
  int grid_y_count = 10;
  int grid_phi_count = 8;
  double y_span = 0.0;  // <= 0: defaults to the hand aperture
  PhiAxis phi_axis = PhiAxis::frame_z;
  double frame_radius = 0.01;
  double push_step = 0.001;
  std::uint64_t seed = 0;

  void validate() const;
};

struct GraspCandidate {
  HandPose pose;
  int source_point = -1;
  DarbouxFrame frame;
  double width = 0.0;
  int y_index = 0;
  int phi_index = 0;
};

// Draws num_samples points uniformly (seeded, with replacement) from the
// valid-normal cloud points inside the region of interest, runs the
// (y, phi) grid search around each Darboux frame and keeps pushed-forward
// poses whose closing region captures at least one point. Result order is
// normalized by (source_point, y_index, phi_index); duplicates from repeated
// draws are kept.
std::vector<GraspCandidate> sample_candidates(const ViewpointCloud& cloud,
                                              const SpatialIndex& index,
                                              const Aabb& roi,
                                              const HandGeometry& geom,
                                              const SamplerConfig& cfg);

// JSON-lines serialization:
// {"position":[...],"rotation":[9 row-major],"width":w,
//  "source":{"point":id,"y":yi,"phi":pi}}
std::string candidates_to_jsonl(const std::vector<GraspCandidate>& candidates);
std::vector<GraspCandidate> candidates_from_jsonl(const std::string& text);

void save_candidates(const std::vector<GraspCandidate>& candidates,
                     const std::string& path);
std::vector<GraspCandidate> load_candidates(const std::string& path);

}  // namespace gpd
