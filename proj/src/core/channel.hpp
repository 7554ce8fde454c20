#pragma once

#include "core/config.hpp"

namespace bp {

// Time to push one block over a link of length d_meters at the Shannon rate:
//   B_block / (b * log2(1 + rho * c0 * d^-eps / (N0 * b))).
// Strictly increasing in d and block size, strictly decreasing in bandwidth.
double propagation_time(const ChannelParams& p, double d_meters);

}  // namespace bp
