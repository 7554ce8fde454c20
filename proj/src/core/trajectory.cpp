#include "core/trajectory.hpp"

#include <cmath>
#include <vector>

#include "core/aob.hpp"
#include "core/channel.hpp"
#include "core/error.hpp"

namespace bp {

int route_size(int miner_count, double r_ratio) {
  return static_cast<int>(std::floor(miner_count * r_ratio));
}

Trajectory evaluate_trajectory(const MinerInstance& inst,
                               const ChannelParams& channel,
                               const NetworkConfig& network,
                               std::span<const int> order, double sigma) {
  if (order.empty())
    throw_error(BP_ERR_INVALID_TRAJECTORY, "order must be non-empty");
  std::vector<uint8_t> seen(inst.miner_count, 0);
  for (int id : order) {
    if (id < 0 || id >= inst.miner_count)
      throw_error(BP_ERR_INVALID_TRAJECTORY, "miner index out of range");
    if (seen[id])
      throw_error(BP_ERR_INVALID_TRAJECTORY,
                  "miner " + std::to_string(id) + " visited twice");
    seen[id] = 1;
  }

  Trajectory t;
  t.order.assign(order.begin(), order.end());
  for (size_t l = 0; l + 1 < order.size(); ++l) {
    int a = order[l], b = order[l + 1];
    if (!inst.adjacent(a, b))
      throw_error(BP_ERR_INVALID_TRAJECTORY,
                  "hop " + std::to_string(a) + "->" + std::to_string(b) +
                      " is not an edge");
    double d = distance(inst, a, b);
    double gamma = propagation_time(channel, d * network.meters_per_unit);
    AobParams hop{channel.getdata_rate_mu, gamma};
    t.hop_distances.push_back(d);
    t.hop_gamma_s.push_back(gamma);
    t.hop_aob_s.push_back(aob_closed_form(hop));  // throws when unstable
  }
  for (double d : t.hop_distances) t.route_length += d;
  for (double a : t.hop_aob_s) t.total_aob_s += a;
  for (int id : order) t.total_reputation += inst.reputation[id];
  for (size_t l = 1; l < order.size(); ++l)
    if (inst.reputation[order[l]] <= sigma) t.violates_constraint = true;
  return t;
}

}  // namespace bp
