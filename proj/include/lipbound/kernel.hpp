#pragma once

#include <cstdint>
#include <variant>
#include <vector>

namespace lipbound {

/// A 4-D convolution kernel, cout x cin x s x s, row-major with cout
/// outermost. The spatial side s must be odd: the operator semantics assume
/// "same" zero padding p = s/2, which has no even-s analogue here.
struct Kernel4 {
  int cout = 0;
  int cin = 0;
  int s = 0;
  std::vector<double> data;

  Kernel4() = default;

  /// Validating constructor: throws ValidationError / UnsupportedShapeError
  /// when the invariants do not hold (size mismatch, even s, non-finite
  /// entries).
  Kernel4(int cout, int cin, int s, std::vector<double> data);

  int degree() const { return s / 2; }  // trig-polynomial degree d

  std::size_t size() const { return data.size(); }

  double at(int i, int j, int u, int v) const {
    return data[((static_cast<std::size_t>(i) * cin + j) * s + u) * s + v];
  }
  double& at(int i, int j, int u, int v) {
    return data[((static_cast<std::size_t>(i) * cin + j) * s + u) * s + v];
  }

  bool operator==(const Kernel4&) const = default;
};

struct GaussianDist {
  double sigma = 1.0;
};
struct UniformDist {
  double a = 0.0;
  double b = 1.0;
};
using KernelDist = std::variant<GaussianDist, UniformDist>;

/// Deterministic i.i.d. random kernel; a pure function of (seed, dims, dist).
Kernel4 random_kernel(std::uint64_t seed, int cout, int cin, int s,
                      const KernelDist& dist = GaussianDist{});

/// Scales every entry; handy for unit-Frobenius normalization in benchmarks.
Kernel4 scaled(const Kernel4& k, double factor);

double frobenius_norm(const Kernel4& k);

}  // namespace lipbound
