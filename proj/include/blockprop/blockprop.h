/* blockprop — reputation-aware block propagation route optimization.
 *
 * C API over the core library: opaque handles, integer error codes,
 * thread-local error messages. All functions return bp_status unless
 * they are trivial accessors that cannot fail.
 */
#ifndef BLOCKPROP_H
#define BLOCKPROP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BP_API __declspec(dllexport)
#else
#define BP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bp_status {
  BP_OK = 0,
  BP_ERR_INVALID_ARG = 1,
  BP_ERR_INVALID_INSTANCE = 2,
  BP_ERR_INVALID_TRAJECTORY = 3,
  BP_ERR_STABILITY = 4,       /* mu * gamma >= 1: getdata queue unstable */
  BP_ERR_DOMAIN = 5,          /* argument outside an operation's domain */
  BP_ERR_INFEASIBLE = 6,      /* not enough eligible miners for a rollout */
  BP_ERR_NO_INTERACTION = 7,  /* opinion requested for an empty window */
  BP_ERR_DEGENERATE_WEIGHTS = 8,
  BP_ERR_NO_RECOMMENDATION = 9,
  BP_ERR_FUSION_SINGULARITY = 10,
  BP_ERR_CONFIG = 11,
  BP_ERR_IO = 12,
  BP_ERR_NUMERIC = 13, /* NaN/Inf encountered during training */
  BP_ERR_UNKNOWN = 99
} bp_status;

typedef struct bp_config bp_config;
typedef struct bp_instance bp_instance;
typedef struct bp_trajectory bp_trajectory;
typedef struct bp_policy bp_policy;
typedef struct bp_reputation bp_reputation;

/* Library version. */
BP_API void bp_version(int* major, int* minor, int* patch);

/* Message for the most recent failure on this thread. Never NULL. */
BP_API const char* bp_last_error(void);

/* Frees strings returned by bp_*_to_json style calls. */
BP_API void bp_string_free(char* s);

/* ---- configuration ---------------------------------------------------- */

BP_API bp_status bp_config_create(bp_config** out);
BP_API bp_status bp_config_load(const char* path, bp_config** out);
BP_API bp_status bp_config_from_json(const char* json_text, bp_config** out);
/* Dotted key, JSON-encoded value, e.g. ("channel.bandwidth_hz", "22e6"). */
BP_API bp_status bp_config_set(bp_config* cfg, const char* key, const char* json_value);
BP_API bp_status bp_config_to_json(const bp_config* cfg, char** out_json);
BP_API void bp_config_free(bp_config* cfg);

/* ---- miner-network instances ------------------------------------------ */

BP_API bp_status bp_instance_generate(const bp_config* cfg, int32_t miners,
                                      uint64_t seed, bp_instance** out);
BP_API bp_status bp_instance_load(const char* path, bp_instance** out);
BP_API bp_status bp_instance_save(const bp_instance* inst, const char* path);
BP_API int32_t bp_instance_miner_count(const bp_instance* inst);
BP_API bp_status bp_instance_coord(const bp_instance* inst, int32_t miner,
                                   double* x, double* y);
BP_API bp_status bp_instance_reputation(const bp_instance* inst, int32_t miner,
                                        double* out);
BP_API bp_status bp_instance_distance(const bp_instance* inst, int32_t i,
                                      int32_t j, double* out);
BP_API void bp_instance_free(bp_instance* inst);

/* ---- link model and age analytics -------------------------------------- */

/* Shannon-rate transfer time of one block over d_meters, using cfg's channel. */
BP_API bp_status bp_propagation_time(const bp_config* cfg, double d_meters,
                                     double* out_seconds);
/* Average age of the getdata queue: gamma + 1/mu + mu*gamma^3/(1 - mu*gamma). */
BP_API bp_status bp_aob_closed_form(double mu, double gamma, double* out);
BP_API bp_status bp_system_time_pdf(double mu, double gamma, double t, double* out);
BP_API bp_status bp_fork_probability(double mu, double gamma_total, double* out);
/* Event-driven single-server queue simulation; the independent check on the
 * closed form. Optionally writes the age sawtooth as CSV (trace_csv_path may
 * be NULL). */
BP_API bp_status bp_simulate_aob(double mu, double gamma, int64_t num_arrivals,
                                 uint64_t seed, const char* trace_csv_path,
                                 double* out_mean_age);

/* ---- subjective-logic reputation ---------------------------------------- */

/* Single-window opinion with negative-interaction weight xi. */
BP_API bp_status bp_opinion_from_window(int32_t positives, int32_t negatives,
                                        double success_prob, double xi,
                                        double* trust, double* distrust,
                                        double* uncertainty);
BP_API bp_status bp_opinion_fuse(double t_local, double f_local, double u_local,
                                 double t_rec, double f_rec, double u_rec,
                                 double* trust, double* distrust,
                                 double* uncertainty);
/* Reputation value of an opinion: T + eta * U. */
BP_API bp_status bp_opinion_reputation(double trust, double uncertainty,
                                       double eta, double* out);
/* Simulates per-pair interaction logs and writes them as CSV rows
 * (i, j, k, alpha, beta, q). */
BP_API bp_status bp_logs_simulate_csv(const bp_config* cfg, int32_t miners,
                                      uint64_t seed, const char* path);
/* Runs the full opinion pipeline over a log CSV; handle carries the final
 * pairwise reputations plus per-miner scalars. */
BP_API bp_status bp_reputation_from_logs_csv(const bp_config* cfg,
                                             const char* path, int32_t miners,
                                             bp_reputation** out);
BP_API bp_status bp_reputation_pair(const bp_reputation* rep, int32_t i,
                                    int32_t j, double* out);
BP_API bp_status bp_reputation_miner(const bp_reputation* rep, int32_t miner,
                                     double* out);
BP_API bp_status bp_reputation_save_matrix_csv(const bp_reputation* rep,
                                               const char* path);
BP_API void bp_reputation_free(bp_reputation* rep);

/* ---- trajectories ------------------------------------------------------- */

BP_API bp_status bp_evaluate_trajectory(const bp_config* cfg,
                                        const bp_instance* inst,
                                        const int32_t* order, int32_t len,
                                        bp_trajectory** out);
BP_API bp_status bp_greedy_trajectory(const bp_config* cfg,
                                      const bp_instance* inst,
                                      int use_reputation_mask,
                                      bp_trajectory** out);
BP_API bp_status bp_gossip_trajectory(const bp_config* cfg,
                                      const bp_instance* inst,
                                      int use_reputation_mask, uint64_t seed,
                                      bp_trajectory** out);
BP_API int32_t bp_trajectory_len(const bp_trajectory* t);
BP_API bp_status bp_trajectory_order(const bp_trajectory* t, int32_t* buf,
                                     int32_t buf_len);
BP_API double bp_trajectory_total_aob(const bp_trajectory* t);
BP_API double bp_trajectory_route_length(const bp_trajectory* t);
BP_API double bp_trajectory_total_reputation(const bp_trajectory* t);
BP_API int bp_trajectory_violates_constraint(const bp_trajectory* t);
BP_API void bp_trajectory_free(bp_trajectory* t);

/* ---- attention routing policy ------------------------------------------- */

BP_API bp_status bp_policy_create(const bp_config* cfg, uint64_t seed,
                                  bp_policy** out);
BP_API bp_status bp_policy_load(const char* path, bp_policy** out);
BP_API bp_status bp_policy_save(const bp_policy* p, const char* path);
/* mode: 0 = greedy decode, 1 = sample. */
BP_API bp_status bp_policy_rollout(const bp_policy* p, const bp_config* cfg,
                                   const bp_instance* inst, int mode,
                                   uint64_t seed, int use_reputation_mask,
                                   bp_trajectory** out_traj,
                                   double* out_log_prob);
BP_API void bp_policy_free(bp_policy* p);

/* ---- training ------------------------------------------------------------ */

typedef void (*bp_train_progress_fn)(int epoch, int step, double mean_cost,
                                     double baseline_cost, void* user);

/* REINFORCE with the configured baseline; writes a per-step CSV log and
 * per-epoch checkpoints into checkpoint_dir (either may be NULL). */
BP_API bp_status bp_train(const bp_config* cfg, const char* log_csv_path,
                          const char* checkpoint_dir,
                          bp_train_progress_fn progress, void* user,
                          bp_policy** out);
/* One-sided paired t-test, H1: mean(candidate - baseline) < 0. */
BP_API bp_status bp_paired_ttest_one_sided(const double* candidate,
                                           const double* baseline, int32_t n,
                                           double* out_p);

/* ---- experiments ---------------------------------------------------------- */

/* spec_json: {"name":..., "miner_counts":[...], "bandwidths_hz":[...],
 *             "mechanisms":[...], "repetitions":..., "seed":...,
 *             "checkpoint":... } with defaults for absent keys. */
BP_API bp_status bp_run_aob_sweep(const bp_config* cfg, const char* spec_json,
                                  const char* output_dir);
BP_API bp_status bp_run_reputation_sweep(const bp_config* cfg,
                                         const char* spec_json,
                                         const char* output_dir);
BP_API bp_status bp_run_training_ablation(const bp_config* cfg,
                                          const char* spec_json,
                                          const char* output_dir);
BP_API bp_status bp_render_trajectory(const bp_config* cfg,
                                      const bp_instance* inst,
                                      const bp_trajectory* traj,
                                      const char* svg_path,
                                      const char* csv_path);
/* Closed form vs the event-driven queue over a (mu, gamma) grid. */
BP_API bp_status bp_validate_aob(const bp_config* cfg, const char* spec_json,
                                 const char* output_dir);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BLOCKPROP_H */
