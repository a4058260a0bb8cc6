#pragma once

#include <span>
#include <utility>

#include "lipbound/dense_mat.hpp"
#include "lipbound/trigpoly.hpp"

namespace lipbound {

/// n x n Toeplitz matrix with entry (i, j) = a_{j-i}; coeffs holds a_h for
/// h = -(n-1)..(n-1), so coeffs.size() must be 2n-1.
DenseMat toeplitz_from_symbol(std::span<const double> coeffs, int n);

/// Doubly-block Toeplitz matrix generated by f: n^2 x n^2 with entry
/// (i, j) = c(j1 - i1, j2 - i2) in block/inner index decomposition
/// i = i1*n + i2. Coefficients outside the polynomial support are zero.
DenseMat dbt_from_poly(const TrigPoly2& f, int n);

/// The four Hankel-type boundary operators of the product decomposition.
/// Entry (i, j) picks the coefficient of f at:
///   alpha0: (j1 + i1 + 1, j2 - i2)
///   alpha1: (j1 - i1,     j2 + i2 + 1)
///   alpha2: (j1 + i1 + 1, j2 + i2 + 1)
///   alpha3: (j1 - i1 - n, j2 + i2 + 1)
enum class HankelVariant { alpha0, alpha1, alpha2, alpha3 };

DenseMat hankel_materialize(const TrigPoly2& f, int n, HankelVariant variant);

/// Max-abs entry of
///   D(fg) - [ D(f)D(g) + sum_p H_p(f*)^T H_p(g) + Q (sum_p H_p(f)^T H_p(g*)) Q ]
/// with Q the anti-identity. Zero (to rounding) for all polynomials with
/// deg f + deg g < n; requires that guard.
double widom_residual(const TrigPoly2& f, const TrigPoly2& g, int n);

/// Smallest eigenvalue of D(|f|^2) - D(f)^T D(f), a positive semi-definite
/// matrix (sum of Gram terms); requires 2 deg f < n.
double psd_residual_min_eig(const TrigPoly2& f, int n);

/// lhs = sigma_1 of the horizontal concatenation, rhs = sqrt(sum sigma_1^2);
/// the concatenation bound asserts lhs <= rhs.
std::pair<double, double> concat_bound_check(std::span<const DenseMat> mats);

}  // namespace lipbound
