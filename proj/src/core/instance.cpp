#include "core/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include <nlohmann/json.hpp>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace bp {

using nlohmann::json;

void MinerInstance::validate() const {
  if (miner_count < 2)
    throw_error(BP_ERR_INVALID_INSTANCE, "instance needs at least 2 miners");
  if (coords.rows() != miner_count ||
      reputation.size() != static_cast<size_t>(miner_count) ||
      adjacency.size() != static_cast<size_t>(miner_count) * miner_count)
    throw_error(BP_ERR_INVALID_INSTANCE, "instance field sizes disagree");
  for (int i = 0; i < miner_count; ++i) {
    if (coords(i, 0) < 0 || coords(i, 0) > 1 || coords(i, 1) < 0 || coords(i, 1) > 1)
      throw_error(BP_ERR_INVALID_INSTANCE, "coordinates must lie in [0,1]^2");
    if (reputation[i] < 0 || reputation[i] > 1)
      throw_error(BP_ERR_INVALID_INSTANCE, "reputation must lie in [0,1]");
    if (adjacent(i, i))
      throw_error(BP_ERR_INVALID_INSTANCE, "adjacency must be irreflexive");
    for (int j = 0; j < i; ++j)
      if (adjacent(i, j) != adjacent(j, i))
        throw_error(BP_ERR_INVALID_INSTANCE, "adjacency must be symmetric");
  }
}

namespace {

void fill_knn_adjacency(MinerInstance& inst, int knn) {
  const int m = inst.miner_count;
  std::fill(inst.adjacency.begin(), inst.adjacency.end(), uint8_t{0});
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) {
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      double da = (inst.coords.row(a) - inst.coords.row(i)).squaredNorm();
      double db = (inst.coords.row(b) - inst.coords.row(i)).squaredNorm();
      return da != db ? da < db : a < b;
    });
    int added = 0;
    for (int j : idx) {
      if (j == i) continue;
      inst.adjacency[static_cast<size_t>(i) * m + j] = 1;
      inst.adjacency[static_cast<size_t>(j) * m + i] = 1;  // keep symmetric
      if (++added >= knn) break;
    }
  }
}

}  // namespace

MinerInstance generate_instance(int miner_count, uint64_t seed,
                                const ReputationSource& rep_source, int knn) {
  if (miner_count < 2)
    throw_error(BP_ERR_INVALID_INSTANCE, "instance needs at least 2 miners");
  MinerInstance inst;
  inst.miner_count = miner_count;
  inst.seed = seed;
  inst.coords.resize(miner_count, 2);
  Rng rng(mix_seed(seed, 0xc00d));
  for (int i = 0; i < miner_count; ++i) {
    inst.coords(i, 0) = rng.uniform();
    inst.coords(i, 1) = rng.uniform();
  }

  inst.adjacency.assign(static_cast<size_t>(miner_count) * miner_count, 1);
  for (int i = 0; i < miner_count; ++i)
    inst.adjacency[static_cast<size_t>(i) * miner_count + i] = 0;
  if (knn > 0) fill_knn_adjacency(inst, knn);

  switch (rep_source.kind) {
    case ReputationSource::Kind::Logs: {
      InteractionLogs logs = simulate_interaction_logs(
          miner_count, rep_source.honest_fraction, mix_seed(seed, 0x10f5),
          rep_source.params);
      ReputationMatrix rep = compute_reputation(logs, rep_source.params);
      inst.reputation = rep.per_miner;
      break;
    }
    case ReputationSource::Kind::Uniform: {
      Rng rrng(mix_seed(seed, 0x0e9));
      inst.reputation.resize(miner_count);
      for (double& r : inst.reputation) r = rrng.uniform();
      break;
    }
    case ReputationSource::Kind::Constant:
      inst.reputation.assign(miner_count, rep_source.value);
      break;
    case ReputationSource::Kind::Direct:
      if (rep_source.direct.size() != static_cast<size_t>(miner_count))
        throw_error(BP_ERR_INVALID_INSTANCE,
                    "direct reputation list has wrong length");
      inst.reputation = rep_source.direct;
      break;
  }
  inst.validate();
  return inst;
}

double distance(const MinerInstance& inst, int i, int j) {
  if (i < 0 || j < 0 || i >= inst.miner_count || j >= inst.miner_count)
    throw_error(BP_ERR_DOMAIN, "miner index out of range");
  if (i == j)
    throw_error(BP_ERR_DOMAIN, "distance requires two distinct miners");
  return (inst.coords.row(i) - inst.coords.row(j)).norm();
}

void save_instance(const MinerInstance& inst, const std::string& path) {
  json j;
  j["M"] = inst.miner_count;
  j["seed"] = inst.seed;
  json coords = json::array();
  for (int i = 0; i < inst.miner_count; ++i)
    coords.push_back({inst.coords(i, 0), inst.coords(i, 1)});
  j["coords"] = coords;
  j["reputations"] = inst.reputation;
  // Adjacency is omitted when fully connected, the default.
  bool full = true;
  for (int i = 0; i < inst.miner_count && full; ++i)
    for (int k = 0; k < inst.miner_count && full; ++k)
      if (i != k && !inst.adjacent(i, k)) full = false;
  if (!full) {
    json adj = json::array();
    for (int i = 0; i < inst.miner_count; ++i) {
      json row = json::array();
      for (int k = 0; k < inst.miner_count; ++k)
        row.push_back(inst.adjacent(i, k));
      adj.push_back(row);
    }
    j["adjacency"] = adj;
  }
  std::ofstream out(path);
  if (!out) throw_error(BP_ERR_IO, "cannot write " + path);
  out << j.dump(2) << "\n";
}

MinerInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_error(BP_ERR_IO, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw_error(BP_ERR_IO, "instance parse error: " + std::string(e.what()));
  }
  MinerInstance inst;
  inst.miner_count = j.at("M").get<int>();
  inst.seed = j.value("seed", uint64_t{0});
  inst.coords.resize(inst.miner_count, 2);
  const json& coords = j.at("coords");
  if (coords.size() != static_cast<size_t>(inst.miner_count))
    throw_error(BP_ERR_INVALID_INSTANCE, "coords length mismatch");
  for (int i = 0; i < inst.miner_count; ++i) {
    inst.coords(i, 0) = coords[i][0].get<double>();
    inst.coords(i, 1) = coords[i][1].get<double>();
  }
  inst.reputation = j.at("reputations").get<std::vector<double>>();
  inst.adjacency.assign(static_cast<size_t>(inst.miner_count) * inst.miner_count, 1);
  for (int i = 0; i < inst.miner_count; ++i)
    inst.adjacency[static_cast<size_t>(i) * inst.miner_count + i] = 0;
  if (j.contains("adjacency")) {
    const json& adj = j.at("adjacency");
    for (int i = 0; i < inst.miner_count; ++i)
      for (int k = 0; k < inst.miner_count; ++k)
        inst.adjacency[static_cast<size_t>(i) * inst.miner_count + k] =
            adj[i][k].get<bool>() ? 1 : 0;
  }
  inst.validate();
  return inst;
}

}  // namespace bp
