#pragma once

#include <optional>

#include "lipbound/kernel.hpp"

namespace lipbound {

struct ComparatorResult {
  enum class Method { sedghi, frobenius };
  Method method{};
  double value = 0.0;
  std::optional<int> n;  // sedghi depends on the input size, frobenius does not
  double wall_time_ms = 0.0;
};

/// Circulant-spectrum approximation: zero-pad each s x s slice to n x n, take
/// the 2-D DFT, and return the maximum sigma_1 of the cout x cin matrix of
/// transformed values over the n^2 frequency pairs. An approximation of the
/// operator norm, not a bound.
ComparatorResult sedghi_estimate(const Kernel4& kernel, int n);

/// Reshaped-kernel bounds. scaled_spectral = s * sigma_1 of the kernel
/// reshaped to cout x (cin*s*s); plain = Frobenius norm of the whole tensor.
/// The shipped default is scaled_spectral — the calibration run showed the
/// plain variant sits below the true sigma_1 on every sampled Gaussian kernel
/// and therefore fails the upper-bound contract (see config/comparators.json).
enum class FrobeniusVariant { scaled_spectral, plain };

inline constexpr FrobeniusVariant kFrobeniusDefault = FrobeniusVariant::scaled_spectral;

double frobenius_value(const Kernel4& kernel, FrobeniusVariant variant);

ComparatorResult frobenius_estimate(const Kernel4& kernel);

}  // namespace lipbound
