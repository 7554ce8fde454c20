#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace bp {

// Physical-layer constants of the Shannon link model plus the getdata rate.
// dBm/dB fields in config files are converted on parse; stored values are
// always linear (watts, W/Hz, unitless gain).
struct ChannelParams {
  double block_size_bits = 8e6;
  double bandwidth_hz = 180e3;
  double tx_power_watts = 0.19952623149688797;      // 23 dBm
  double unit_gain = 1e-3;                          // -30 dB
  double path_loss_exp = 3.38;
  double noise_density_w_per_hz = 3.9810717055349695e-21;  // -174 dBm/Hz
  double getdata_rate_mu = 0.05;

  void validate() const;  // all fields strictly positive
};

struct NetworkConfig {
  double meters_per_unit = 1000.0;  // unit-square edge in meters
  double r_ratio = 0.75;            // fraction of miners a route must visit
  int knn = 0;                      // 0 = fully connected, else k-nearest
};

struct ReputationParams {
  double eta = 0.5;          // weight of uncertainty in the reputation value
  double xi = 2.0;           // weight of negative interactions, > 1
  double lambda_fresh = 0.5; // freshness factor in (0,1)
  double gamma_rec = 1.5;    // positive-interaction weight in recommendations
  double delta_rec = 1.0;    // recommender coefficient
  double sigma = 0.5;        // eligibility threshold in (0,1)
  int windows = 10;          // interaction windows per pair
  double honest_fraction = 0.8;  // log simulator: share of honest miners

  void validate() const;
};

struct PolicyConfig {
  int d_h = 128;
  int layers = 3;
  int heads = 8;
  int d_k = 16;  // per-head key dim; default d_h / heads
  int d_v = 16;
  int d_ff = 512;
  int d_f = 2;  // input feature dim (2-D coordinates)
  double clip_c = 10.0;
  bool mask_first = true;          // reputation mask also applies to pi_1
  bool reputation_feature = false; // hook: append reputation to input features

  void validate() const;
};

enum class LrSchedule { Const1e3, Const1e4, Decay1e3, Decay1e4, Custom };
enum class BaselineKind { Rollout, Exponential, Critic };

struct TrainConfig {
  int epochs = 10;
  int steps_per_epoch = 100;
  int batch = 128;
  int miners = 19;
  LrSchedule lr_schedule = LrSchedule::Decay1e3;
  double lr_custom = 1e-3;  // used when lr_schedule == Custom
  double lr_decay = 0.96;   // per-epoch factor for the decay schedules
  double ttest_alpha = 0.05;
  uint64_t seed = 1234;
  BaselineKind baseline = BaselineKind::Rollout;
  double exp_beta = 0.8;   // exponential-baseline smoothing factor
  int heldout = 256;       // held-out instances for the baseline t-test
  double grad_clip = 1.0;  // global-norm clip; <= 0 disables
  int checkpoint_every = 1;

  void validate() const;
};

struct Config {
  ChannelParams channel;
  NetworkConfig network;
  ReputationParams reputation;
  PolicyConfig policy;
  TrainConfig train;

  static Config load(const std::string& path);
  static Config from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  // Overrides one field by dotted key with a JSON-encoded value, e.g.
  // set("channel.bandwidth_hz", "22e6"). Unit-suffixed keys accepted.
  void set(const std::string& dotted_key, const std::string& json_value);

  void validate() const;
};

double dbm_to_watts(double dbm);
double db_to_linear(double db);

}  // namespace bp
