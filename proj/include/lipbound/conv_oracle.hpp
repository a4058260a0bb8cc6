#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lipbound/dense_mat.hpp"
#include "lipbound/kernel.hpp"
#include "lipbound/lipbound.hpp"

namespace lipbound {

/// A concrete stride-1 convolution operator: kernel applied to n x n inputs
/// with "same" zero padding p = s/2 (the only padding the oracle supports).
/// The operator maps cin*n^2 reals to cout*n^2 reals.
struct ConvOperatorSpec {
  Kernel4 kernel;
  int n = 0;
  int pad = 0;

  ConvOperatorSpec(Kernel4 kernel, int n);           // pad defaults to s/2
  ConvOperatorSpec(Kernel4 kernel, int n, int pad);  // pad must equal s/2

  int in_dim() const { return kernel.cin * n * n; }
  int out_dim() const { return kernel.cout * n * n; }
};

/// Materialization guard: refuse matrices above 2^26 entries (~512 MB).
inline constexpr std::size_t kMaterializeGuard = std::size_t{1} << 26;

/// The exact operator matrix, a cout x cin grid of n^2 x n^2 doubly-block
/// Toeplitz blocks with entry (block offset h1, inner offset h2) equal to
/// kernel[i][j][d + h1][d - h2]. M * vec(x) == conv_apply(x) for all x.
/// Throws SizeError above the guard (use the matrix-free path instead).
DenseMat materialize(const ConvOperatorSpec& spec);

/// Direct convolution, y[i,a,b] = sum_{j,u,v} k[i,j,u,v] x[j, a+u-d, b+d-v]
/// with zero padding. x is cin x n x n row-major; the result is
/// cout x n x n row-major.
std::vector<double> conv_apply(const ConvOperatorSpec& spec, std::span<const double> x);

/// Transpose operator: <conv_apply(x), y> == <x, adjoint_apply(y)>.
std::vector<double> adjoint_apply(const ConvOperatorSpec& spec, std::span<const double> y);

struct PowerMethodResult {
  double sigma = 0.0;
  int iterations = 0;
};

/// Power iteration on M^T M through conv_apply / adjoint_apply from a seeded
/// random start. One iteration applies M then M^T; the estimate after each
/// iteration is ||M v|| for the current unit v, which is non-decreasing.
/// Stops early when the relative change drops below tol. A zero kernel
/// returns sigma 0 after one iteration.
PowerMethodResult power_method_conv(const ConvOperatorSpec& spec, int iters, double tol,
                                    std::uint64_t seed);

/// Matrix-free Lanczos on the normal operator (smaller side), double
/// reorthogonalization, deterministic start. Relative accuracy tol or better
/// in practice for these operators; used as the exact reference where the
/// dense route would be too large.
double sigma_max_lanczos(const ConvOperatorSpec& spec, double tol = 1e-12, int max_iter = 0,
                         std::uint64_t seed = 0x752fc1e2u);

/// Exact sigma_1 of the operator: dense eigensolve when the matrix dimension
/// is at most `dense_cutoff`, Lanczos otherwise.
double sigma_max_exact(const ConvOperatorSpec& spec, double tol = 1e-10, int dense_cutoff = 512);

/// Tightness-study record: gamma = lipbound - sigma1 at input size n.
struct GapSeries {
  struct Entry {
    int n = 0;
    double lipbound = 0.0;
    double sigma1 = 0.0;
    double gamma = 0.0;
  };
  std::vector<Entry> entries;
};

/// For each n, the bound under `grid` next to the exact sigma_1 of the
/// materialized operator (dense where feasible, Lanczos beyond).
GapSeries gamma_series(const Kernel4& kernel, std::span<const int> ns, const GridSpec& grid);

}  // namespace lipbound
