#pragma once

#include <span>
#include <vector>

#include "core/config.hpp"
#include "core/instance.hpp"

namespace bp {

// An ordered propagation route with per-hop and aggregate metrics.
struct Trajectory {
  std::vector<int> order;
  std::vector<double> hop_distances;  // unit-square units
  std::vector<double> hop_gamma_s;    // Shannon transfer time per hop
  std::vector<double> hop_aob_s;      // average block age per hop
  double route_length = 0.0;
  double total_aob_s = 0.0;
  double total_reputation = 0.0;  // sum of visited miners' scalar reputation
  bool violates_constraint = false;  // some visited miner after the first
                                     // has reputation <= sigma
};

// Fills every hop metric from the channel model and the closed-form age.
// Throws on repeated indices, non-adjacent hops, or an unstable hop
// (mu * gamma >= 1). Accepts any order length >= 1.
Trajectory evaluate_trajectory(const MinerInstance& inst,
                               const ChannelParams& channel,
                               const NetworkConfig& network,
                               std::span<const int> order, double sigma);

// floor(M * r_ratio): how many miners a full route must visit.
int route_size(int miner_count, double r_ratio);

}  // namespace bp
