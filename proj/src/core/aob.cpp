#include "core/aob.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace bp {

void AobParams::validate() const {
  if (!(mu > 0) || !(gamma > 0))
    throw_error(BP_ERR_DOMAIN, "aob parameters must be positive");
  if (mu * gamma >= 1.0 - 1e-9)
    throw_error(BP_ERR_STABILITY,
                "mu*gamma = " + std::to_string(mu * gamma) +
                    " >= 1: getdata queue unstable, age undefined");
}

double aob_closed_form(const AobParams& p) {
  p.validate();
  double rho = p.mu * p.gamma;
  return p.gamma + 1.0 / p.mu + p.mu * p.gamma * p.gamma * p.gamma / (1.0 - rho);
}

double aob_closed_form_mu2(const AobParams& p) {
  p.validate();
  double rho = p.mu * p.gamma;
  return p.gamma + 1.0 / p.mu +
         p.mu * p.mu * p.gamma * p.gamma * p.gamma / (1.0 - rho);
}

double system_time_pdf(const AobParams& p, double t) {
  p.validate();
  if (t < 0) throw_error(BP_ERR_DOMAIN, "system_time_pdf requires t >= 0");
  double rate = 1.0 / p.gamma - p.mu;
  return rate * std::exp(-rate * t);
}

double fork_probability(double mu, double gamma_total) {
  if (!(mu > 0) || gamma_total < 0)
    throw_error(BP_ERR_DOMAIN, "fork_probability requires mu > 0, gamma >= 0");
  return 1.0 - std::exp(-mu * gamma_total);
}

AobSimResult simulate_aob(const AobParams& p, int64_t num_arrivals,
                          uint64_t seed, bool keep_trace) {
  if (num_arrivals < 1)
    throw_error(BP_ERR_DOMAIN, "need at least one arrival");
  if (!(p.mu > 0) || !(p.gamma > 0))
    throw_error(BP_ERR_DOMAIN, "aob parameters must be positive");

  Rng rng(seed);
  AobSimResult res;
  double d_prev = 0.0;  // system time of the previous getdata
  double t_send = 0.0;  // when the current getdata goes out
  double area = 0.0, elapsed = 0.0;
  for (int64_t i = 0; i < num_arrivals; ++i) {
    double x = rng.exponential(p.mu);
    double service = rng.exponential(1.0 / p.gamma);
    double wait = d_prev > x ? d_prev - x : 0.0;
    double d = wait + service;
    area += x * d + 0.5 * x * x;
    elapsed += x;
    t_send += x;
    if (keep_trace) {
      res.trace.event_times.push_back(t_send + d);
      res.trace.ages_at_events.push_back(d);
    }
    d_prev = d;
  }
  res.mean_age = area / elapsed;
  if (keep_trace)
    res.trace.horizon = res.trace.event_times.empty()
                            ? 0.0
                            : res.trace.event_times.back();
  return res;
}

void save_trace_csv(const AgeTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw_error(BP_ERR_IO, "cannot write " + path);
  out << "event_time,age\n";
  char buf[80];
  for (size_t i = 0; i < trace.event_times.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", trace.event_times[i],
                  trace.ages_at_events[i]);
    out << buf;
  }
}

}  // namespace bp
