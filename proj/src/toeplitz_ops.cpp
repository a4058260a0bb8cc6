#include "lipbound/toeplitz_ops.hpp"

#include <cmath>
#include <string>

#include "lipbound/errors.hpp"

namespace lipbound {

DenseMat toeplitz_from_symbol(std::span<const double> coeffs, int n) {
  if (n < 1) throw ParameterError("toeplitz_from_symbol: n must be >= 1");
  if (coeffs.size() != static_cast<std::size_t>(2 * n - 1))
    throw ValidationError("toeplitz_from_symbol: need 2n-1 = " + std::to_string(2 * n - 1) +
                          " coefficients, got " + std::to_string(coeffs.size()));
  DenseMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = coeffs[static_cast<std::size_t>(j - i + n - 1)];
  return m;
}

DenseMat dbt_from_poly(const TrigPoly2& f, int n) {
  if (n < 1) throw ParameterError("dbt_from_poly: n must be >= 1");
  const int nn = n * n;
  DenseMat m(nn, nn);
  for (int i = 0; i < nn; ++i) {
    const int i1 = i / n, i2 = i % n;
    for (int j = 0; j < nn; ++j) m.at(i, j) = f.coeff(j / n - i1, j % n - i2);
  }
  return m;
}

DenseMat hankel_materialize(const TrigPoly2& f, int n, HankelVariant variant) {
  if (n < 1) throw ParameterError("hankel_materialize: n must be >= 1");
  const int nn = n * n;
  DenseMat m(nn, nn);
  for (int i = 0; i < nn; ++i) {
    const int i1 = i / n, i2 = i % n;
    for (int j = 0; j < nn; ++j) {
      const int j1 = j / n, j2 = j % n;
      int h1 = 0, h2 = 0;
      switch (variant) {
        case HankelVariant::alpha0: h1 = j1 + i1 + 1; h2 = j2 - i2; break;
        case HankelVariant::alpha1: h1 = j1 - i1;     h2 = j2 + i2 + 1; break;
        case HankelVariant::alpha2: h1 = j1 + i1 + 1; h2 = j2 + i2 + 1; break;
        case HankelVariant::alpha3: h1 = j1 - i1 - n; h2 = j2 + i2 + 1; break;
      }
      m.at(i, j) = f.coeff(h1, h2);
    }
  }
  return m;
}

double widom_residual(const TrigPoly2& f, const TrigPoly2& g, int n) {
  if (f.d + g.d >= n)
    throw ParameterError("widom_residual: need deg f + deg g < n (got " +
                         std::to_string(f.d + g.d) + " >= " + std::to_string(n) + ")");
  const TrigPoly2 fc = poly_conj(f), gc = poly_conj(g);
  DenseMat rhs = matmul(dbt_from_poly(f, n), dbt_from_poly(g, n));
  DenseMat inner(n * n, n * n);
  for (HankelVariant v : {HankelVariant::alpha0, HankelVariant::alpha1, HankelVariant::alpha2,
                          HankelVariant::alpha3}) {
    rhs = add(rhs, matmul(transpose(hankel_materialize(fc, n, v)), hankel_materialize(g, n, v)));
    inner =
        add(inner, matmul(transpose(hankel_materialize(f, n, v)), hankel_materialize(gc, n, v)));
  }
  const DenseMat q = DenseMat::anti_identity(n * n);
  rhs = add(rhs, matmul(q, matmul(inner, q)));
  return max_abs(sub(dbt_from_poly(poly_mul(f, g), n), rhs));
}

double psd_residual_min_eig(const TrigPoly2& f, int n) {
  if (2 * f.d >= n)
    throw ParameterError("psd_residual_min_eig: need 2 deg f < n (got " +
                         std::to_string(2 * f.d) + " >= " + std::to_string(n) + ")");
  const DenseMat df = dbt_from_poly(f, n);
  const DenseMat residual =
      sub(dbt_from_poly(poly_mul(f, poly_conj(f)), n), matmul(transpose(df), df));
  return min_eig_sym(residual);
}

std::pair<double, double> concat_bound_check(std::span<const DenseMat> mats) {
  const double lhs = sigma_max_dense(hconcat(mats));
  double acc = 0.0;
  for (const DenseMat& m : mats) {
    const double s = sigma_max_dense(m);
    acc += s * s;
  }
  return {lhs, std::sqrt(acc)};
}

}  // namespace lipbound
