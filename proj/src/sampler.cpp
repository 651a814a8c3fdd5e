// SPDX-License-Identifier: Apache-2.0
#include "gpd/sampler.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "gpd/parallel.hpp"
#include "gpd/rng.hpp"

namespace gpd {

void SamplerConfig::validate() const {
  if (num_samples < 1 || grid_y_count < 1 || grid_phi_count < 1)
    throw std::invalid_argument("sampler counts must be >= 1");
  if (frame_radius <= 0 || push_step <= 0)
    throw std::invalid_argument("sampler radii must be positive");
}

std::vector<GraspCandidate> sample_candidates(const ViewpointCloud& cloud,
                                              const SpatialIndex& index,
                                              const Aabb& roi,
                                              const HandGeometry& geom,
                                              const SamplerConfig& cfg) {
  cfg.validate();
  geom.validate();

  std::vector<int> eligible;
  for (int i = 0; i < static_cast<int>(cloud.points.size()); ++i) {
    if (!roi.contains(cloud.points[i])) continue;
    if (!cloud.has_normals() || !cloud.normal_valid[i]) continue;
    eligible.push_back(i);
  }
  if (eligible.empty()) return {};

  Rng rng(cfg.seed);
  std::vector<int> draws(cfg.num_samples);
  for (int s = 0; s < cfg.num_samples; ++s)
    draws[s] = eligible[rng.uniform_index(eligible.size())];

  double y_span = cfg.y_span > 0 ? cfg.y_span : geom.aperture;
  std::vector<double> ys(cfg.grid_y_count);
  for (int i = 0; i < cfg.grid_y_count; ++i)
    ys[i] = cfg.grid_y_count == 1
                ? 0.0
                : -y_span / 2 + y_span * i / (cfg.grid_y_count - 1);
  std::vector<double> phis(cfg.grid_phi_count);
  for (int j = 0; j < cfg.grid_phi_count; ++j)
    phis[j] = -M_PI / 2 + M_PI * j / cfg.grid_phi_count;

  // grid searches are independent; results land in per-sample slots
  std::vector<std::vector<GraspCandidate>> slots(draws.size());
  parallel_for(0, draws.size(), [&](std::size_t s) {
    int pid = draws[s];
    auto frame = compute_frame(cloud, index, pid, cfg.frame_radius);
    if (!frame) return;
    std::vector<int> sweep_ids;
    for (int yi = 0; yi < cfg.grid_y_count; ++yi) {
      for (int pj = 0; pj < cfg.grid_phi_count; ++pj) {
        auto x_star = push_forward(geom, *frame, ys[yi], phis[pj], cloud, index,
                                   cfg.push_step, cfg.phi_axis, &sweep_ids);
        if (!x_star) continue;
        HandPose pose =
            make_grid_pose(*frame, *x_star, ys[yi], phis[pj], cfg.phi_axis);
        auto captured = closing_points_ids(geom, pose, cloud.points, sweep_ids);
        if (captured.empty()) continue;
        GraspCandidate cand;
        cand.pose = pose;
        cand.source_point = pid;
        cand.frame = *frame;
        Mat3 rot_t = pose.frame.rotation.transpose();
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (int id : captured) {
          double yv = (rot_t * (cloud.points[id] - pose.frame.translation)).y();
          lo = std::min(lo, yv);
          hi = std::max(hi, yv);
        }
        cand.width = hi - lo;
        cand.y_index = yi;
        cand.phi_index = pj;
        slots[s].push_back(std::move(cand));
      }
    }
  });

  std::vector<GraspCandidate> out;
  for (auto& slot : slots)
    for (auto& c : slot) out.push_back(std::move(c));
  std::stable_sort(out.begin(), out.end(),
                   [](const GraspCandidate& a, const GraspCandidate& b) {
                     if (a.source_point != b.source_point)
                       return a.source_point < b.source_point;
                     if (a.y_index != b.y_index) return a.y_index < b.y_index;
                     return a.phi_index < b.phi_index;
                   });
  return out;
}

namespace {

nlohmann::json candidate_to_json(const GraspCandidate& c) {
  nlohmann::json j;
  j["position"] = {c.pose.frame.translation.x(), c.pose.frame.translation.y(),
                   c.pose.frame.translation.z()};
  std::vector<double> rot(9);
  for (int r = 0; r < 3; ++r)
    for (int k = 0; k < 3; ++k) rot[r * 3 + k] = c.pose.frame.rotation(r, k);
  j["rotation"] = rot;
  j["width"] = c.width;
  j["source"] = {{"point", c.source_point}, {"y", c.y_index}, {"phi", c.phi_index}};
  return j;
}

GraspCandidate candidate_from_json(const nlohmann::json& j) {
  GraspCandidate c;
  for (int k = 0; k < 3; ++k) c.pose.frame.translation[k] = j.at("position").at(k);
  for (int r = 0; r < 3; ++r)
    for (int k = 0; k < 3; ++k)
      c.pose.frame.rotation(r, k) = j.at("rotation").at(r * 3 + k);
  c.width = j.at("width");
  c.source_point = j.at("source").at("point");
  c.y_index = j.at("source").at("y");
  c.phi_index = j.at("source").at("phi");
  return c;
}

}  // namespace

std::string candidates_to_jsonl(const std::vector<GraspCandidate>& candidates) {
  std::ostringstream out;
  for (const auto& c : candidates) out << candidate_to_json(c).dump() << '\n';
  return out.str();
}

std::vector<GraspCandidate> candidates_from_jsonl(const std::string& text) {
  std::vector<GraspCandidate> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(candidate_from_json(nlohmann::json::parse(line)));
  }
  return out;
}

void save_candidates(const std::vector<GraspCandidate>& candidates,
                     const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << candidates_to_jsonl(candidates);
}

std::vector<GraspCandidate> load_candidates(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return candidates_from_jsonl(ss.str());
}

}  // namespace gpd
