#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace lipbound {

/// Deterministic random stream. std::normal_distribution and friends are
/// implementation-defined, so the uniform/gaussian mappings are spelled out
/// here; a given seed produces the same sequence on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform in [0, 1), 53 mantissa bits.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  /// Standard normal via Box-Muller; one value per call, the pair's second
  /// half is discarded to keep the stream position a pure function of the
  /// call count.
  double gaussian() {
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  double gaussian(double sigma) { return sigma * gaussian(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace lipbound
