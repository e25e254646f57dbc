#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace pulsebound {

/// Gaussian source with a platform-independent stream: std::mt19937_64
/// (fully specified by the standard) feeding a hand-written Box-Muller
/// transform. std::normal_distribution is implementation-defined, so it
/// is not used.
class GaussianSource {
 public:
  static constexpr const char* algorithm = "mt19937_64+box-muller";

  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  double uniform() {
    // 53 random bits in [0, 1).
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard complex normal: E|z|^2 = 1.
  std::complex<double> complex_normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(a), r * std::sin(a)};
  }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; derives independent per-trial seeds.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace pulsebound
