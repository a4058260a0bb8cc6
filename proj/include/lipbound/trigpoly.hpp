#pragma once

#include <complex>
#include <vector>

#include "lipbound/kernel.hpp"

namespace lipbound {

/// Bivariate trigonometric polynomial with real coefficients,
///   f(w1, w2) = sum_{|h1|<=d, |h2|<=d} c(h1,h2) exp(i (h1 w1 + h2 w2)).
/// Coefficients are stored dense, (2d+1)^2 row-major, h1 as the outer index.
/// h1 is the block-diagonal offset and h2 the within-block diagonal offset of
/// the doubly-block Toeplitz operator this polynomial generates.
struct TrigPoly2 {
  int d = 0;
  std::vector<double> coeffs;

  TrigPoly2() = default;
  explicit TrigPoly2(int degree);
  TrigPoly2(int degree, std::vector<double> coeffs);

  int side() const { return 2 * d + 1; }

  double coeff(int h1, int h2) const {
    if (h1 < -d || h1 > d || h2 < -d || h2 > d) return 0.0;
    return coeffs[static_cast<std::size_t>(h1 + d) * side() + (h2 + d)];
  }
  double& coeff(int h1, int h2) {
    return coeffs[static_cast<std::size_t>(h1 + d) * side() + (h2 + d)];
  }

  /// Direct summation; exactly 2pi-periodic up to floating error.
  std::complex<double> eval(double w1, double w2) const;
};

/// The family f_ij, one polynomial per (out-channel, in-channel) pair. All
/// members share the same degree d = s/2.
struct PolyBank {
  int cout = 0;
  int cin = 0;
  std::vector<TrigPoly2> polys;  // [cout][cin] row-major

  const TrigPoly2& poly(int out, int in) const {
    return polys[static_cast<std::size_t>(out) * cin + in];
  }
  int degree() const { return polys.empty() ? 0 : polys.front().d; }
};

/// Generating polynomials of the kernel's per-channel-pair operators:
/// coeff(h1, h2) = kernel[i][j][d + h1][d - h2], which is the entry the
/// materialized operator carries at block offset h1, inner offset h2
/// (pinned by the oracle-equality golden test).
PolyBank poly_from_kernel(const Kernel4& kernel);

/// sum_j |f_{out,j}(w1,w2)|^2, the quantity PolyGrid maximizes per out-channel.
double channel_power(const PolyBank& bank, int out_index, double w1, double w2);

/// Coefficient-wise product (degrees add) and conjugate (index negation, since
/// coefficients are real). Used by the operator-identity checks.
TrigPoly2 poly_mul(const TrigPoly2& f, const TrigPoly2& g);
TrigPoly2 poly_conj(const TrigPoly2& f);

}  // namespace lipbound
