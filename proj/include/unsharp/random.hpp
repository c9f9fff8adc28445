#pragma once

#include "unsharp/operators.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace unsharp {

/// Deterministic, seedable sample source.  Doubles are produced from the raw
/// 64-bit stream so that identical seeds give identical values on every
/// platform and in every build mode.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t bits() { return engine_(); }

  /// Uniform direction on the unit sphere.
  Vec3 unit_vector() {
    const double z = 1.0 - 2.0 * uniform();
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = 2.0 * std::numbers::pi * uniform();
    return Vec3(r * std::cos(phi), r * std::sin(phi), z);
  }

  /// Uniform point in the closed unit ball.
  Vec3 ball_vector() { return std::cbrt(uniform()) * unit_vector(); }

  /// Random valid qubit effect: a0 ~ U(0,1), direction uniform on the sphere,
  /// |a| ~ U(0, min(a0, 1-a0)).  Covers biased effects.
  QubitEffect qubit_effect() {
    const double a0 = uniform();
    const double len = uniform(0.0, std::min(a0, 1.0 - a0));
    return QubitEffect(a0, len * unit_vector());
  }

  /// Unbiased qubit effect Bloch part: |a| ~ U(0, 1/2), uniform direction.
  Vec3 unbiased_bloch() { return uniform(0.0, 0.5) * unit_vector(); }

  DensityOperator qubit_density() {
    return DensityOperator(bloch_operator(0.5, 0.5 * ball_vector()));
  }

  /// Row-stochastic 2x2 kernel with independent uniform rows.
  ConfusionMatrix confusion() {
    ConfusionMatrix c;
    const double p = uniform();
    const double q = uniform();
    c << p, 1.0 - p, q, 1.0 - q;
    return c;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace unsharp
