#include "core/config.hpp"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "core/error.hpp"

namespace bp {

using nlohmann::json;

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw_error(BP_ERR_CONFIG, what);
}

double get_or(const json& j, const char* key, double fallback) {
  return j.contains(key) ? j.at(key).get<double>() : fallback;
}
int get_or(const json& j, const char* key, int fallback) {
  return j.contains(key) ? j.at(key).get<int>() : fallback;
}
bool get_or(const json& j, const char* key, bool fallback) {
  return j.contains(key) ? j.at(key).get<bool>() : fallback;
}

// Accepts either the linear key or its unit-suffixed variant.
double linear_field(const json& j, const char* linear_key, const char* unit_key,
                    double (*convert)(double), double fallback) {
  if (j.contains(unit_key)) return convert(j.at(unit_key).get<double>());
  return get_or(j, linear_key, fallback);
}

ChannelParams channel_from_json(const json& j) {
  ChannelParams p;
  p.block_size_bits = get_or(j, "block_size_bits", p.block_size_bits);
  p.bandwidth_hz = get_or(j, "bandwidth_hz", p.bandwidth_hz);
  p.tx_power_watts = linear_field(j, "tx_power_watts", "tx_power_dbm",
                                  dbm_to_watts, p.tx_power_watts);
  p.unit_gain = linear_field(j, "unit_gain", "unit_gain_db", db_to_linear,
                             p.unit_gain);
  p.path_loss_exp = get_or(j, "path_loss_exp", p.path_loss_exp);
  p.noise_density_w_per_hz =
      linear_field(j, "noise_density_w_per_hz", "noise_density_dbm_per_hz",
                   dbm_to_watts, p.noise_density_w_per_hz);
  p.getdata_rate_mu = get_or(j, "getdata_rate_mu", p.getdata_rate_mu);
  return p;
}

LrSchedule lr_schedule_from_string(const std::string& s) {
  if (s == "const_1e-3") return LrSchedule::Const1e3;
  if (s == "const_1e-4") return LrSchedule::Const1e4;
  if (s == "decay_1e-3") return LrSchedule::Decay1e3;
  if (s == "decay_1e-4") return LrSchedule::Decay1e4;
  if (s == "custom") return LrSchedule::Custom;
  throw_error(BP_ERR_CONFIG, "unknown lr_schedule: " + s);
}

std::string lr_schedule_to_string(LrSchedule s) {
  switch (s) {
    case LrSchedule::Const1e3: return "const_1e-3";
    case LrSchedule::Const1e4: return "const_1e-4";
    case LrSchedule::Decay1e3: return "decay_1e-3";
    case LrSchedule::Decay1e4: return "decay_1e-4";
    case LrSchedule::Custom: return "custom";
  }
  return "decay_1e-3";
}

BaselineKind baseline_from_string(const std::string& s) {
  if (s == "rollout") return BaselineKind::Rollout;
  if (s == "exponential") return BaselineKind::Exponential;
  if (s == "critic") return BaselineKind::Critic;
  throw_error(BP_ERR_CONFIG, "unknown baseline: " + s);
}

std::string baseline_to_string(BaselineKind k) {
  switch (k) {
    case BaselineKind::Rollout: return "rollout";
    case BaselineKind::Exponential: return "exponential";
    case BaselineKind::Critic: return "critic";
  }
  return "rollout";
}

}  // namespace

void ChannelParams::validate() const {
  require(block_size_bits > 0, "block_size_bits must be positive");
  require(bandwidth_hz > 0, "bandwidth_hz must be positive");
  require(tx_power_watts > 0, "tx_power_watts must be positive");
  require(unit_gain > 0, "unit_gain must be positive");
  require(path_loss_exp > 0, "path_loss_exp must be positive");
  require(noise_density_w_per_hz > 0, "noise_density_w_per_hz must be positive");
  require(getdata_rate_mu > 0, "getdata_rate_mu must be positive");
}

void ReputationParams::validate() const {
  require(eta >= 0 && eta <= 1, "eta must lie in [0,1]");
  require(xi > 1, "xi must exceed 1");
  require(lambda_fresh > 0 && lambda_fresh < 1, "lambda_fresh must lie in (0,1)");
  require(gamma_rec > 1, "gamma_rec must exceed 1");
  require(delta_rec > 0, "delta_rec must be positive");
  require(sigma > 0 && sigma < 1, "sigma must lie in (0,1)");
  require(windows >= 1, "windows must be >= 1");
  require(honest_fraction >= 0 && honest_fraction <= 1,
          "honest_fraction must lie in [0,1]");
}

void PolicyConfig::validate() const {
  require(d_h > 0 && layers > 0 && heads > 0 && d_k > 0 && d_v > 0 && d_ff > 0,
          "policy dims must be positive");
  require(d_f >= 2, "d_f must be >= 2");
  require(clip_c > 0, "clip_c must be positive");
}

void TrainConfig::validate() const {
  require(epochs >= 1 && steps_per_epoch >= 1 && batch >= 1,
          "train budget fields must be >= 1");
  require(miners >= 2, "train.miners must be >= 2");
  require(ttest_alpha > 0 && ttest_alpha < 1, "ttest_alpha must lie in (0,1)");
  require(heldout >= 2, "heldout must be >= 2");
}

void Config::validate() const {
  channel.validate();
  reputation.validate();
  policy.validate();
  train.validate();
  require(network.meters_per_unit > 0, "meters_per_unit must be positive");
  require(network.r_ratio > 0 && network.r_ratio <= 1,
          "r_ratio must lie in (0,1]");
}

Config Config::from_json(const json& j) {
  Config c;
  if (j.contains("channel")) c.channel = channel_from_json(j.at("channel"));
  if (j.contains("network")) {
    const json& n = j.at("network");
    c.network.meters_per_unit = get_or(n, "meters_per_unit", c.network.meters_per_unit);
    c.network.r_ratio = get_or(n, "r_ratio", c.network.r_ratio);
    c.network.knn = get_or(n, "knn", c.network.knn);
  }
  if (j.contains("reputation")) {
    const json& r = j.at("reputation");
    ReputationParams& p = c.reputation;
    p.eta = get_or(r, "eta", p.eta);
    p.xi = get_or(r, "xi", p.xi);
    p.lambda_fresh = get_or(r, "lambda_fresh", p.lambda_fresh);
    p.gamma_rec = get_or(r, "gamma_rec", p.gamma_rec);
    p.delta_rec = get_or(r, "delta_rec", p.delta_rec);
    p.sigma = get_or(r, "sigma", p.sigma);
    p.windows = get_or(r, "windows", p.windows);
    p.honest_fraction = get_or(r, "honest_fraction", p.honest_fraction);
  }
  if (j.contains("policy")) {
    const json& p = j.at("policy");
    PolicyConfig& pc = c.policy;
    pc.d_h = get_or(p, "d_h", pc.d_h);
    pc.layers = get_or(p, "layers", pc.layers);
    pc.heads = get_or(p, "heads", pc.heads);
    pc.d_k = p.contains("d_k") ? p.at("d_k").get<int>() : pc.d_h / pc.heads;
    pc.d_v = p.contains("d_v") ? p.at("d_v").get<int>() : pc.d_h / pc.heads;
    pc.d_ff = get_or(p, "d_ff", pc.d_ff);
    pc.d_f = get_or(p, "d_f", pc.d_f);
    pc.clip_c = get_or(p, "clip_c", pc.clip_c);
    pc.mask_first = get_or(p, "mask_first", pc.mask_first);
    pc.reputation_feature = get_or(p, "reputation_feature", pc.reputation_feature);
  }
  if (j.contains("train")) {
    const json& t = j.at("train");
    TrainConfig& tc = c.train;
    tc.epochs = get_or(t, "epochs", tc.epochs);
    tc.steps_per_epoch = get_or(t, "steps_per_epoch", tc.steps_per_epoch);
    tc.batch = get_or(t, "batch", tc.batch);
    tc.miners = get_or(t, "miners", tc.miners);
    if (t.contains("lr_schedule"))
      tc.lr_schedule = lr_schedule_from_string(t.at("lr_schedule").get<std::string>());
    tc.lr_custom = get_or(t, "lr_custom", tc.lr_custom);
    tc.lr_decay = get_or(t, "lr_decay", tc.lr_decay);
    tc.ttest_alpha = get_or(t, "ttest_alpha", tc.ttest_alpha);
    if (t.contains("seed")) tc.seed = t.at("seed").get<uint64_t>();
    if (t.contains("baseline"))
      tc.baseline = baseline_from_string(t.at("baseline").get<std::string>());
    tc.exp_beta = get_or(t, "exp_beta", tc.exp_beta);
    tc.heldout = get_or(t, "heldout", tc.heldout);
    tc.grad_clip = get_or(t, "grad_clip", tc.grad_clip);
    tc.checkpoint_every = get_or(t, "checkpoint_every", tc.checkpoint_every);
  }
  c.validate();
  return c;
}

json Config::to_json() const {
  json j;
  j["channel"] = {{"block_size_bits", channel.block_size_bits},
                  {"bandwidth_hz", channel.bandwidth_hz},
                  {"tx_power_watts", channel.tx_power_watts},
                  {"unit_gain", channel.unit_gain},
                  {"path_loss_exp", channel.path_loss_exp},
                  {"noise_density_w_per_hz", channel.noise_density_w_per_hz},
                  {"getdata_rate_mu", channel.getdata_rate_mu}};
  j["network"] = {{"meters_per_unit", network.meters_per_unit},
                  {"r_ratio", network.r_ratio},
                  {"knn", network.knn}};
  j["reputation"] = {{"eta", reputation.eta},
                     {"xi", reputation.xi},
                     {"lambda_fresh", reputation.lambda_fresh},
                     {"gamma_rec", reputation.gamma_rec},
                     {"delta_rec", reputation.delta_rec},
                     {"sigma", reputation.sigma},
                     {"windows", reputation.windows},
                     {"honest_fraction", reputation.honest_fraction}};
  j["policy"] = {{"d_h", policy.d_h},
                 {"layers", policy.layers},
                 {"heads", policy.heads},
                 {"d_k", policy.d_k},
                 {"d_v", policy.d_v},
                 {"d_ff", policy.d_ff},
                 {"d_f", policy.d_f},
                 {"clip_c", policy.clip_c},
                 {"mask_first", policy.mask_first},
                 {"reputation_feature", policy.reputation_feature}};
  j["train"] = {{"epochs", train.epochs},
                {"steps_per_epoch", train.steps_per_epoch},
                {"batch", train.batch},
                {"miners", train.miners},
                {"lr_schedule", lr_schedule_to_string(train.lr_schedule)},
                {"lr_custom", train.lr_custom},
                {"lr_decay", train.lr_decay},
                {"ttest_alpha", train.ttest_alpha},
                {"seed", train.seed},
                {"baseline", baseline_to_string(train.baseline)},
                {"exp_beta", train.exp_beta},
                {"heldout", train.heldout},
                {"grad_clip", train.grad_clip},
                {"checkpoint_every", train.checkpoint_every}};
  return j;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_error(BP_ERR_IO, "cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw_error(BP_ERR_CONFIG, "config parse error in " + path + ": " + e.what());
  }
  return from_json(j);
}

void Config::set(const std::string& dotted_key, const std::string& json_value) {
  json j = to_json();
  json value;
  try {
    value = json::parse(json_value);
  } catch (const json::exception& e) {
    throw_error(BP_ERR_CONFIG,
                "bad value for " + dotted_key + ": " + e.what());
  }
  json* node = &j;
  size_t start = 0;
  while (true) {
    size_t dot = dotted_key.find('.', start);
    std::string part = dotted_key.substr(
        start, dot == std::string::npos ? std::string::npos : dot - start);
    if (part.empty()) throw_error(BP_ERR_CONFIG, "empty config key segment");
    if (dot == std::string::npos) {
      (*node)[part] = value;
      break;
    }
    if (!node->contains(part))
      throw_error(BP_ERR_CONFIG, "unknown config section: " + part);
    node = &(*node)[part];
    start = dot + 1;
  }
  *this = from_json(j);
}

}  // namespace bp
