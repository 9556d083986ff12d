#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "carl/constants.hpp"

namespace carl {

// Deterministic random source. The mt19937_64 stream is fixed by the
// standard and the transforms below are explicit, so a given seed yields
// the same draws on every platform (std::*_distribution would not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller, two fresh uniforms per draw.
  double normal() {
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(constants::two_pi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace carl
