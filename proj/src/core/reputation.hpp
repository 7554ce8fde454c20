#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "core/config.hpp"

namespace bp {

// Subjective-logic opinion. Components lie in [0,1] and sum to 1.
struct OpinionTuple {
  double trust = 0.0;
  double distrust = 0.0;
  double uncertainty = 1.0;
};

inline OpinionTuple vacuous_opinion() { return {0.0, 0.0, 1.0}; }

// One interaction window between an ordered miner pair.
struct InteractionWindow {
  int window_index = 1;      // k, 1-based
  int positives = 0;         // alpha
  int negatives = 0;         // beta
  double success_prob = 1.0; // q, block-transmission success probability
};

// Opinion of a single window with negative interactions weighted by xi:
//   U = 1 - q,  T = (1-U) a/(a + xi b),  F = (1-U) xi b/(a + xi b).
// Throws NO_INTERACTION when a = b = 0 (callers substitute the vacuous
// opinion for empty pairs).
OpinionTuple local_window_opinion(const InteractionWindow& w, double xi);

// Freshness-weighted average of the per-window opinions, weight
// lambda * ln(t_k) with t_k = window_index + 1 so every weight is positive.
OpinionTuple local_opinion(std::span<const InteractionWindow> windows,
                           const ReputationParams& p);

// Reputation value of an opinion: T + eta * U. Shared by the local and the
// final (post-fusion) reputation.
double opinion_reputation(const OpinionTuple& o, double eta);

struct RecommenderInput {
  OpinionTuple opinion;      // recommender's local opinion toward the target
  double alpha_to_target = 0;
  double beta_to_target = 0;
  double delta = 1.0;        // pre-defined recommendation coefficient
  double mean_interaction = 1.0;  // recommender's average H over all miners
};

// Interaction-frequency-weighted average of recommender opinions.
// Weight per recommender: delta * (gamma_rec*alpha + beta) / mean_interaction.
OpinionTuple recommended_opinion(std::span<const RecommenderInput> recs,
                                 double gamma_rec);

// Combines a local and a recommended opinion into the final one. Throws
// FUSION_SINGULARITY when both uncertainties are zero; the engine then
// averages the two opinions (documented fallback).
OpinionTuple fuse_final_opinion(const OpinionTuple& local,
                                const OpinionTuple& rec);

// Per-ordered-pair interaction histories for M miners.
struct InteractionLogs {
  int miner_count = 0;
  // windows[i * M + j] holds the history of evaluator i toward target j.
  std::vector<std::vector<InteractionWindow>> windows;

  std::span<const InteractionWindow> pair(int i, int j) const {
    return windows[static_cast<size_t>(i) * miner_count + j];
  }
};

// Draws per-pair logs. A miner's own profile (honest or not) drives the
// logs others record about it: honest targets get many positives and high
// link quality, dishonest targets the reverse. Deterministic per seed.
// Miners with index < round(honest_fraction * M) are honest.
InteractionLogs simulate_interaction_logs(int miner_count, double honest_fraction,
                                          uint64_t seed,
                                          const ReputationParams& p);

struct ReputationMatrix {
  int miner_count = 0;
  Eigen::MatrixXd pair_final;     // (i,j): final reputation of i toward j
  std::vector<double> per_miner;  // mean over evaluators, used for masking
};

// Full pipeline: local opinions, recommendations (all s not in {i,j} with at
// least one interaction with j), fusion, reputation values, per-miner means.
ReputationMatrix compute_reputation(const InteractionLogs& logs,
                                    const ReputationParams& p);

// Pairwise reputation summed along a route's hops; diagnostic counterpart of
// the per-miner total used in experiments.
double edge_reputation_sum(const ReputationMatrix& rep,
                           std::span<const int> order);

// CSV rows: i, j, k, alpha, beta, q
void save_logs_csv(const InteractionLogs& logs, const std::string& path);
InteractionLogs load_logs_csv(const std::string& path, int miner_count);
void save_matrix_csv(const ReputationMatrix& rep, const std::string& path);

}  // namespace bp
