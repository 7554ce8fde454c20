#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "core/config.hpp"
#include "core/reputation.hpp"

namespace bp {

// How generate_instance assigns per-miner reputation scalars.
struct ReputationSource {
  enum class Kind { Logs, Uniform, Constant, Direct };
  Kind kind = Kind::Logs;
  double honest_fraction = 0.8;     // Logs
  double value = 1.0;               // Constant
  std::vector<double> direct;       // Direct, size M
  ReputationParams params;          // Logs: engine parameters
};

// A miner network drawn on the unit square.
struct MinerInstance {
  int miner_count = 0;
  uint64_t seed = 0;
  Eigen::Matrix<double, Eigen::Dynamic, 2> coords;  // rows in [0,1]^2
  std::vector<double> reputation;                   // per-miner, in [0,1]
  std::vector<uint8_t> adjacency;                   // M*M, row-major, irreflexive

  bool adjacent(int i, int j) const {
    return adjacency[static_cast<size_t>(i) * miner_count + j] != 0;
  }
  void validate() const;
};

// Coordinates i.i.d. uniform on the unit square; adjacency fully connected
// (or k-nearest when knn > 0); reputations per the source. Deterministic
// for a fixed (M, seed).
MinerInstance generate_instance(int miner_count, uint64_t seed,
                                const ReputationSource& rep_source,
                                int knn = 0);

// Euclidean distance between two distinct miners, in unit-square units.
double distance(const MinerInstance& inst, int i, int j);

void save_instance(const MinerInstance& inst, const std::string& path);
MinerInstance load_instance(const std::string& path);

}  // namespace bp
