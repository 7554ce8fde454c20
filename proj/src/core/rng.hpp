#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>

namespace bp {

// Seedable generator with explicit sample transforms. The distributions are
// written out (inverse CDF, Bernoulli loop) instead of using <random>'s
// distribution classes, whose output is implementation-defined; mt19937_64
// itself is pinned by the standard, so streams reproduce across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t raw() { return gen_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n), n >= 1. Rejection-free modulo is fine here;
  // n is tiny compared to 2^64 so the bias is far below anything observable.
  uint64_t uniform_int(uint64_t n) { return gen_() % n; }

  // Inverse-CDF exponential with the given rate.
  double exponential(double rate) {
    double u = uniform();
    return -std::log1p(-u) / rate;
  }

  int binomial(int n, double p) {
    int k = 0;
    for (int i = 0; i < n; ++i) k += uniform() < p ? 1 : 0;
    return k;
  }

  // Engine-state round trip, used by resumable training checkpoints.
  std::string serialize() const {
    std::ostringstream os;
    os << gen_;
    return os.str();
  }
  void deserialize(const std::string& s) {
    std::istringstream is(s);
    is >> gen_;
  }

 private:
  std::mt19937_64 gen_;
};

// Stream splitter for deriving independent sub-seeds (splitmix64 step).
inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace bp
