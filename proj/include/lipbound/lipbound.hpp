#pragma once

#include <span>
#include <utility>
#include <vector>

#include "lipbound/errors.hpp"
#include "lipbound/kernel.hpp"

namespace lipbound {

/// Grid-search configuration. When certified, the caller gets a guaranteed
/// upper bound: the grid maximum is inflated by (1 - 2d/S)^{-1}, which
/// requires S > 2d.
struct GridSpec {
  int samples = 10;
  bool certified = false;
};

struct GridMax {
  double value = 0.0;
  double w1 = 0.0;
  double w2 = 0.0;
};

/// Maximum of g over the S x S grid {2pi k / S, k = 1..S} per axis (the loop
/// increments before evaluating, so the last point is 2pi; by periodicity the
/// sampled values match the k = 0..S-1 convention). Scan order is row-major
/// with w1 outer; ties keep the first occurrence, so the argmax is
/// deterministic.
template <typename G>
GridMax polygrid_max(G&& g, int samples) {
  if (samples < 1) throw ParameterError("polygrid_max: samples must be >= 1");
  const double step = 2.0 * 3.141592653589793238462643383279 / samples;
  GridMax best;
  bool first = true;
  for (int i = 1; i <= samples; ++i) {
    const double w1 = i * step;
    for (int j = 1; j <= samples; ++j) {
      const double w2 = j * step;
      const double v = g(w1, w2);
      if (first || v > best.value) {
        best = {v, w1, w2};
        first = false;
      }
    }
  }
  return best;
}

/// (1 - 2d/S)^{-1}; multiplying a grid maximum of |f| by this factor bounds
/// the true supremum. Exactly 1 for constant polynomials. Throws
/// CertificationError when S <= 2d.
double certified_factor(int degree, int samples);

/// Result of one bound computation.
struct BoundReport {
  double bound = 0.0;           // returned value; certified when requested
  double raw_grid_bound = 0.0;  // sqrt(sum over out-channels of grid sup)
  std::vector<double> per_out_channel;             // grid sup of channel_power
  std::vector<std::pair<double, double>> argmax_freqs;  // (w1, w2) per out-channel
  int samples = 0;
  double alpha = 0.0;  // 2d/S when certified, else 0
  double wall_time_ms = 0.0;
};

/// The bound sqrt( sum_i sup_grid sum_j |f_ij|^2 ) on the maximal singular
/// value of the kernel's convolution operator, certified when the grid spec
/// says so. The certified factor multiplies the final aggregated value: every
/// |f_ij| obeys the scalar grid inequality and the aggregate is monotone in
/// each modulus, so the single factor is sound.
BoundReport compute_lipbound(const Kernel4& kernel, const GridSpec& grid = {});

/// sum_i log(compute_lipbound(kernel_i).bound); throws DomainError when any bound is
/// zero (an all-zero layer).
double logsum_lipbound(std::span<const Kernel4> kernels, const GridSpec& grid = {});

}  // namespace lipbound
