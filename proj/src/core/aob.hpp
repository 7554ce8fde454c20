#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bp {

// Parameters of one propagation hop treated as a single-server queue:
// getdata requests arrive at rate mu, block transfers take Exp(1/gamma)
// service time. Stability requires mu * gamma < 1.
struct AobParams {
  double mu = 0.0;     // getdata rate, 1/s
  double gamma = 0.0;  // mean block propagation time, s

  void validate() const;  // positive fields, mu*gamma < 1 - 1e-9
};

// Average block age of a hop:
//   gamma + 1/mu + mu * gamma^3 / (1 - mu * gamma).
double aob_closed_form(const AobParams& p);

// Companion form with the mu^2 numerator, the classical FCFS single-server
// average-age expression. Reported alongside the primary form by validate-aob
// so the event-driven check can say which one it reproduces.
double aob_closed_form_mu2(const AobParams& p);

// Density of the system time (waiting + transfer):
//   (1/gamma - mu) * exp((mu - 1/gamma) t), t >= 0.
double system_time_pdf(const AobParams& p, double t);

// Probability a competing block appears before propagation finishes:
//   1 - exp(-mu * gamma_total).
double fork_probability(double mu, double gamma_total);

// Receipt events of the simulated age sawtooth (age rises at slope 1 and
// drops to the system time at each block receipt).
struct AgeTrace {
  std::vector<double> event_times;     // block receipt instants
  std::vector<double> ages_at_events;  // age right after each receipt
  double horizon = 0.0;
};

struct AobSimResult {
  double mean_age = 0.0;
  AgeTrace trace;
};

// Event-driven first-come-first-served queue: interarrivals Exp(mu),
// service Exp(1/gamma), waiting by the Lindley recursion
// W_i = max(0, D_{i-1} - X_i), D_i = W_i + P_i. Accumulates the trapezoid
// areas Q_i = X_i D_i + X_i^2 / 2 and returns sum(Q) / sum(X). Keeps the
// closed form honest: shares no code with it. Deterministic per seed.
AobSimResult simulate_aob(const AobParams& p, int64_t num_arrivals,
                          uint64_t seed, bool keep_trace = false);

// CSV rows: event_time, age
void save_trace_csv(const AgeTrace& trace, const std::string& path);

}  // namespace bp
