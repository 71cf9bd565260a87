// Seeded randomness for the stochastic bottleneck modes. All draws go
// through this wrapper so traces are reproducible bit for bit per seed.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace aimdsim {

/// splitmix64 step; also used to derive independent per-cell seeds from a
/// master seed plus coordinates.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> coords) {
  std::uint64_t h = mix64(master ^ 0x51ed2701a9e5cabdull);
  for (auto c : coords) h = mix64(h ^ c);
  return h;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0,1) with 53 random bits; stable across platforms.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Index drawn from unnormalized non-negative weights.
  int weighted_index(const std::vector<double>& weights) {
    double total = 0;
    for (double w : weights) total += w;
    double u = uniform01() * total;
    double acc = 0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      acc += weights[i];
      if (u < acc) return static_cast<int>(i);
    }
    return static_cast<int>(weights.size()) - 1;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace aimdsim
