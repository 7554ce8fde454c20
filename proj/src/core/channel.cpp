#include "core/channel.hpp"

#include <cmath>

#include "core/error.hpp"

namespace bp {

double propagation_time(const ChannelParams& p, double d_meters) {
  if (!(d_meters > 0))
    throw_error(BP_ERR_DOMAIN, "propagation_time requires d > 0");
  double snr = p.tx_power_watts * p.unit_gain * std::pow(d_meters, -p.path_loss_exp) /
               (p.noise_density_w_per_hz * p.bandwidth_hz);
  double rate = p.bandwidth_hz * std::log2(1.0 + snr);
  return p.block_size_bits / rate;
}

}  // namespace bp
