#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace rcum {

// SplitMix64 finalizer; decorrelates consecutive (seed, path_id) pairs.
inline std::uint64_t mix_bits(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t path_stream_seed(std::uint64_t seed,
                                      std::uint64_t path_id) {
  return mix_bits(mix_bits(seed) ^ (path_id + 1));
}

// One independent stream per path index, so Monte Carlo results are
// reproducible and independent of how paths are assigned to workers.
// Variate transforms are hand-rolled on top of the engine's standard bit
// stream, keeping draws identical across standard library implementations.
class PathRng {
 public:
  PathRng(std::uint64_t seed, std::uint64_t path_id)
      : engine_(path_stream_seed(seed, path_id)) {}

  // Uniform on [0, 1).
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1].
  double uniform01_positive() { return 1.0 - uniform01(); }

  // Standard normal, Box-Muller with pair caching.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform01_positive()));
    const double theta = 2.0 * std::numbers::pi * uniform01();
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  // Exponential with the given rate (> 0).
  double exponential(double rate) {
    return -std::log(uniform01_positive()) / rate;
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace rcum
