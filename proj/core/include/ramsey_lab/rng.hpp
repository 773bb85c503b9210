#pragma once

#include <cstdint>
#include <random>

namespace ramsey_lab {

/// Name of the generator/stream-split scheme. Bump when either changes;
/// reports carry it so old golden files are recognizably stale.
inline constexpr const char* kRngVersion = "mt19937_64+splitmix64/v1";

std::uint64_t splitmix64(std::uint64_t x);

/// Child seed for stream `index` under `seed`. Trial i of a seeded experiment
/// always draws from derive_seed(seed, i), independent of scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// mt19937_64 with distribution code that does not depend on the standard
/// library's (implementation-defined) distribution classes.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  bool bernoulli(double p) { return p >= 1.0 || uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ramsey_lab
