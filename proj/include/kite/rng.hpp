#pragma once

#include <cstdint>
#include <random>

#include "kite/types.hpp"

namespace kite {

/// Per-run random source. Runs own their generator; batch drivers derive
/// child seeds so that results are independent of execution order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() {
    std::normal_distribution<double> d(0.0, 1.0);
    return d(engine_);
  }

  double normal(double sigma) { return sigma * normal(); }

  Vec3 normal3(double sigma) {
    const double a = normal(sigma);
    const double b = normal(sigma);
    const double c = normal(sigma);
    return {a, b, c};
  }

  std::uint64_t next_u64() { return engine_(); }

  /// splitmix64-style stream derivation for sweep cells / seed indices.
  static std::uint64_t derive(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xbf58476d1ce4e5b9ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace kite
