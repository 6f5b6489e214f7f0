#pragma once

#include <cstdint>
#include <random>

#include "trineq/complex_matrix.hpp"

namespace trineq {

/// Reproducible random source: a std::mt19937_64 engine with the uniform
/// and normal transforms written out explicitly so that draws are identical
/// across standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for partition `index` of a campaign seeded with `seed`.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on (0, 1).
  double uniform_open();
  /// Standard normal (Box-Muller, one value per call).
  double normal();
  /// Circularly symmetric complex Gaussian with unit variance per component.
  Complex complex_normal() {
    const double re = normal();
    return {re, normal()};
  }
  /// Uniform on the closed unit disc.
  Complex unit_disc();

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; used for seed derivation.
std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace trineq
