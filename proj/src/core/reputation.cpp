#include "core/reputation.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace bp {

OpinionTuple local_window_opinion(const InteractionWindow& w, double xi) {
  if (w.positives == 0 && w.negatives == 0)
    throw_error(BP_ERR_NO_INTERACTION,
                "window has no interactions; opinion undefined");
  if (w.positives < 0 || w.negatives < 0)
    throw_error(BP_ERR_DOMAIN, "interaction counts must be non-negative");
  if (w.success_prob < 0 || w.success_prob > 1)
    throw_error(BP_ERR_DOMAIN, "success_prob must lie in [0,1]");
  double u = 1.0 - w.success_prob;
  double denom = w.positives + xi * w.negatives;
  OpinionTuple o;
  o.uncertainty = u;
  o.trust = (1.0 - u) * w.positives / denom;
  o.distrust = (1.0 - u) * xi * w.negatives / denom;
  return o;
}

OpinionTuple local_opinion(std::span<const InteractionWindow> windows,
                           const ReputationParams& p) {
  if (windows.empty())
    throw_error(BP_ERR_NO_INTERACTION, "no windows given");
  double wsum = 0, t = 0, f = 0, u = 0;
  for (const InteractionWindow& w : windows) {
    // t_k = k + 1 keeps ln(t_k) positive for every window.
    double weight = p.lambda_fresh * std::log(static_cast<double>(w.window_index) + 1.0);
    if (weight <= 0) continue;
    OpinionTuple o = local_window_opinion(w, p.xi);
    t += weight * o.trust;
    f += weight * o.distrust;
    u += weight * o.uncertainty;
    wsum += weight;
  }
  if (wsum <= 0)
    throw_error(BP_ERR_DEGENERATE_WEIGHTS, "all freshness weights are zero");
  return {t / wsum, f / wsum, u / wsum};
}

double opinion_reputation(const OpinionTuple& o, double eta) {
  return o.trust + eta * o.uncertainty;
}

OpinionTuple recommended_opinion(std::span<const RecommenderInput> recs,
                                 double gamma_rec) {
  double wsum = 0, t = 0, f = 0, u = 0;
  for (const RecommenderInput& r : recs) {
    if (r.mean_interaction <= 0) continue;
    double h = gamma_rec * r.alpha_to_target + r.beta_to_target;
    double w = r.delta * h / r.mean_interaction;
    if (w <= 0) continue;
    t += w * r.opinion.trust;
    f += w * r.opinion.distrust;
    u += w * r.opinion.uncertainty;
    wsum += w;
  }
  if (wsum <= 0)
    throw_error(BP_ERR_NO_RECOMMENDATION, "no recommender carries weight");
  return {t / wsum, f / wsum, u / wsum};
}

OpinionTuple fuse_final_opinion(const OpinionTuple& local,
                                const OpinionTuple& rec) {
  double ul = local.uncertainty, ur = rec.uncertainty;
  double denom = ul + ur - ur * ul;
  if (denom <= 0)
    throw_error(BP_ERR_FUSION_SINGULARITY,
                "both opinions are fully certain; fusion undefined");
  OpinionTuple o;
  o.trust = (local.trust * ur + rec.trust * ul) / denom;
  o.distrust = (local.distrust * ur + rec.distrust * ul) / denom;
  o.uncertainty = (ur * ul) / denom;
  return o;
}

InteractionLogs simulate_interaction_logs(int miner_count,
                                          double honest_fraction,
                                          uint64_t seed,
                                          const ReputationParams& p) {
  if (miner_count < 2)
    throw_error(BP_ERR_INVALID_INSTANCE, "need at least 2 miners");
  InteractionLogs logs;
  logs.miner_count = miner_count;
  logs.windows.resize(static_cast<size_t>(miner_count) * miner_count);
  int honest = static_cast<int>(std::lround(honest_fraction * miner_count));
  Rng rng(mix_seed(seed, 0x5e9));
  for (int i = 0; i < miner_count; ++i) {
    for (int j = 0; j < miner_count; ++j) {
      if (i == j) continue;
      bool target_honest = j < honest;
      auto& wins = logs.windows[static_cast<size_t>(i) * miner_count + j];
      wins.reserve(p.windows);
      for (int k = 1; k <= p.windows; ++k) {
        InteractionWindow w;
        w.window_index = k;
        int total = 6 + static_cast<int>(rng.uniform_int(5));  // 6..10
        double p_pos = target_honest ? 0.9 : 0.2;
        w.positives = rng.binomial(total, p_pos);
        w.negatives = total - w.positives;
        w.success_prob = target_honest ? rng.uniform(0.85, 0.99)
                                       : rng.uniform(0.30, 0.60);
        wins.push_back(w);
      }
    }
  }
  return logs;
}

ReputationMatrix compute_reputation(const InteractionLogs& logs,
                                    const ReputationParams& p) {
  const int m = logs.miner_count;
  ReputationMatrix out;
  out.miner_count = m;
  out.pair_final = Eigen::MatrixXd::Zero(m, m);

  // Local opinions and summed counts for every ordered pair.
  std::vector<OpinionTuple> local(static_cast<size_t>(m) * m, vacuous_opinion());
  std::vector<double> alpha_sum(static_cast<size_t>(m) * m, 0.0);
  std::vector<double> beta_sum(static_cast<size_t>(m) * m, 0.0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      auto wins = logs.pair(i, j);
      size_t idx = static_cast<size_t>(i) * m + j;
      double a = 0, b = 0;
      for (const auto& w : wins) {
        a += w.positives;
        b += w.negatives;
      }
      alpha_sum[idx] = a;
      beta_sum[idx] = b;
      if (!wins.empty() && a + b > 0) local[idx] = local_opinion(wins, p);
    }
  }

  // Mean interaction volume per recommender, over all M miners.
  std::vector<double> mean_h(m, 0.0);
  for (int s = 0; s < m; ++s) {
    double total = 0;
    for (int j = 0; j < m; ++j) {
      size_t idx = static_cast<size_t>(s) * m + j;
      total += p.gamma_rec * alpha_sum[idx] + beta_sum[idx];
    }
    mean_h[s] = total / m;
  }

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      size_t idx = static_cast<size_t>(i) * m + j;
      std::vector<RecommenderInput> recs;
      for (int s = 0; s < m; ++s) {
        if (s == i || s == j) continue;
        size_t sj = static_cast<size_t>(s) * m + j;
        if (alpha_sum[sj] + beta_sum[sj] <= 0) continue;
        RecommenderInput r;
        r.opinion = local[sj];
        r.alpha_to_target = alpha_sum[sj];
        r.beta_to_target = beta_sum[sj];
        r.delta = p.delta_rec;
        r.mean_interaction = mean_h[s];
        recs.push_back(r);
      }
      OpinionTuple fin;
      if (recs.empty()) {
        fin = local[idx];  // no recommendations: local-only fallback
      } else {
        OpinionTuple rec = recommended_opinion(recs, p.gamma_rec);
        try {
          fin = fuse_final_opinion(local[idx], rec);
        } catch (const Error& e) {
          if (e.code() != BP_ERR_FUSION_SINGULARITY) throw;
          fin = {(local[idx].trust + rec.trust) / 2,
                 (local[idx].distrust + rec.distrust) / 2,
                 (local[idx].uncertainty + rec.uncertainty) / 2};
        }
      }
      out.pair_final(i, j) = opinion_reputation(fin, p.eta);
    }
  }

  out.per_miner.assign(m, 0.0);
  for (int j = 0; j < m; ++j) {
    double sum = 0;
    for (int i = 0; i < m; ++i)
      if (i != j) sum += out.pair_final(i, j);
    out.per_miner[j] = sum / (m - 1);
  }
  return out;
}

double edge_reputation_sum(const ReputationMatrix& rep,
                           std::span<const int> order) {
  double total = 0;
  for (size_t l = 0; l + 1 < order.size(); ++l)
    total += rep.pair_final(order[l], order[l + 1]);
  return total;
}

void save_logs_csv(const InteractionLogs& logs, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw_error(BP_ERR_IO, "cannot write " + path);
  out << "i,j,k,alpha,beta,q\n";
  char buf[128];
  for (int i = 0; i < logs.miner_count; ++i)
    for (int j = 0; j < logs.miner_count; ++j)
      for (const auto& w : logs.pair(i, j)) {
        std::snprintf(buf, sizeof buf, "%d,%d,%d,%d,%d,%.17g\n", i, j,
                      w.window_index, w.positives, w.negatives, w.success_prob);
        out << buf;
      }
}

InteractionLogs load_logs_csv(const std::string& path, int miner_count) {
  std::ifstream in(path);
  if (!in) throw_error(BP_ERR_IO, "cannot open " + path);
  InteractionLogs logs;
  logs.miner_count = miner_count;
  logs.windows.resize(static_cast<size_t>(miner_count) * miner_count);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    InteractionWindow w;
    int i, j;
    if (std::sscanf(line.c_str(), "%d,%d,%d,%d,%d,%lg", &i, &j,
                    &w.window_index, &w.positives, &w.negatives,
                    &w.success_prob) != 6)
      throw_error(BP_ERR_IO, "malformed log row: " + line);
    if (i < 0 || i >= miner_count || j < 0 || j >= miner_count || i == j)
      throw_error(BP_ERR_IO, "log row indices out of range: " + line);
    logs.windows[static_cast<size_t>(i) * miner_count + j].push_back(w);
  }
  return logs;
}

void save_matrix_csv(const ReputationMatrix& rep, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw_error(BP_ERR_IO, "cannot write " + path);
  out << "i,j,final_reputation\n";
  char buf[96];
  for (int i = 0; i < rep.miner_count; ++i)
    for (int j = 0; j < rep.miner_count; ++j) {
      if (i == j) continue;
      std::snprintf(buf, sizeof buf, "%d,%d,%.17g\n", i, j, rep.pair_final(i, j));
      out << buf;
    }
}

}  // namespace bp
