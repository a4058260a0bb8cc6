#include "lipbound/conv_oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "lipbound/errors.hpp"
#include "lipbound/random.hpp"

namespace lipbound {

namespace {

double norm2(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

ConvOperatorSpec::ConvOperatorSpec(Kernel4 kernel_, int n_)
    : kernel(std::move(kernel_)), n(n_), pad(kernel.s / 2) {
  if (n < 1) throw ParameterError("ConvOperatorSpec: n must be >= 1");
}

ConvOperatorSpec::ConvOperatorSpec(Kernel4 kernel_, int n_, int pad_)
    : kernel(std::move(kernel_)), n(n_), pad(pad_) {
  if (n < 1) throw ParameterError("ConvOperatorSpec: n must be >= 1");
  if (pad != kernel.s / 2)
    throw UnsupportedShapeError("ConvOperatorSpec: only same padding p = s/2 = " +
                                std::to_string(kernel.s / 2) + " is supported, got p=" +
                                std::to_string(pad));
}

DenseMat materialize(const ConvOperatorSpec& spec) {
  const Kernel4& k = spec.kernel;
  const int n = spec.n;
  const int d = k.degree();
  const std::size_t rows = static_cast<std::size_t>(k.cout) * n * n;
  const std::size_t cols = static_cast<std::size_t>(k.cin) * n * n;
  if (rows * cols > kMaterializeGuard)
    throw SizeError("materialize: " + std::to_string(rows) + "x" + std::to_string(cols) +
                    " exceeds the dense guard; use the matrix-free path "
                    "(power_method_conv / sigma_max_lanczos)");
  DenseMat m(static_cast<int>(rows), static_cast<int>(cols));
  for (int i = 0; i < k.cout; ++i)
    for (int j = 0; j < k.cin; ++j) {
      // One doubly-block Toeplitz block: entry ((I,r),(J,c)) on block offset
      // h1 = J-I and inner offset h2 = c-r carries kernel[i][j][d+h1][d-h2].
      for (int I = 0; I < n; ++I) {
        const int row0 = i * n * n + I * n;
        for (int J = std::max(0, I - d); J <= std::min(n - 1, I + d); ++J) {
          const int h1 = J - I;
          const int col0 = j * n * n + J * n;
          for (int r = 0; r < n; ++r)
            for (int c = std::max(0, r - d); c <= std::min(n - 1, r + d); ++c)
              m.at(row0 + r, col0 + c) = k.at(i, j, d + h1, d - (c - r));
        }
      }
    }
  return m;
}

std::vector<double> conv_apply(const ConvOperatorSpec& spec, std::span<const double> x) {
  const Kernel4& k = spec.kernel;
  const int n = spec.n;
  const int d = k.degree();
  if (x.size() != static_cast<std::size_t>(spec.in_dim()))
    throw ValidationError("conv_apply: input length " + std::to_string(x.size()) +
                          " does not match cin*n*n = " + std::to_string(spec.in_dim()));
  for (double v : x)
    if (!std::isfinite(v)) throw ValidationError("conv_apply: non-finite input entry");
  std::vector<double> y(static_cast<std::size_t>(spec.out_dim()), 0.0);
  for (int i = 0; i < k.cout; ++i)
    for (int j = 0; j < k.cin; ++j) {
      const double* xin = x.data() + static_cast<std::size_t>(j) * n * n;
      double* yout = y.data() + static_cast<std::size_t>(i) * n * n;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          double acc = 0.0;
          for (int u = 0; u < k.s; ++u) {
            const int r = a + u - d;
            if (r < 0 || r >= n) continue;
            for (int v = 0; v < k.s; ++v) {
              const int c = b + d - v;
              if (c < 0 || c >= n) continue;
              acc += k.at(i, j, u, v) * xin[r * n + c];
            }
          }
          yout[a * n + b] += acc;
        }
    }
  return y;
}

std::vector<double> adjoint_apply(const ConvOperatorSpec& spec, std::span<const double> y) {
  const Kernel4& k = spec.kernel;
  const int n = spec.n;
  const int d = k.degree();
  if (y.size() != static_cast<std::size_t>(spec.out_dim()))
    throw ValidationError("adjoint_apply: input length " + std::to_string(y.size()) +
                          " does not match cout*n*n = " + std::to_string(spec.out_dim()));
  for (double v : y)
    if (!std::isfinite(v)) throw ValidationError("adjoint_apply: non-finite input entry");
  std::vector<double> x(static_cast<std::size_t>(spec.in_dim()), 0.0);
  for (int i = 0; i < k.cout; ++i)
    for (int j = 0; j < k.cin; ++j) {
      const double* yin = y.data() + static_cast<std::size_t>(i) * n * n;
      double* xout = x.data() + static_cast<std::size_t>(j) * n * n;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const double yv = yin[a * n + b];
          if (yv == 0.0) continue;
          for (int u = 0; u < k.s; ++u) {
            const int r = a + u - d;
            if (r < 0 || r >= n) continue;
            for (int v = 0; v < k.s; ++v) {
              const int c = b + d - v;
              if (c < 0 || c >= n) continue;
              xout[r * n + c] += k.at(i, j, u, v) * yv;
            }
          }
        }
    }
  return x;
}

PowerMethodResult power_method_conv(const ConvOperatorSpec& spec, int iters, double tol,
                                    std::uint64_t seed) {
  if (iters < 1) throw ParameterError("power_method_conv: iters must be >= 1");
  Rng rng(seed);
  std::vector<double> v(static_cast<std::size_t>(spec.in_dim()));
  for (auto& z : v) z = rng.gaussian();
  const double nv = norm2(v);
  for (auto& z : v) z /= nv;

  double sigma = 0.0;
  for (int t = 1; t <= iters; ++t) {
    const std::vector<double> u = conv_apply(spec, v);
    const double s = norm2(u);
    if (s == 0.0) return {0.0, t};  // zero kernel (or v in the null space)
    const double prev = sigma;
    sigma = s;
    if (t > 1 && std::abs(sigma - prev) < tol * sigma) return {sigma, t};
    v = adjoint_apply(spec, u);
    const double q = norm2(v);
    if (q == 0.0) return {sigma, t};
    for (auto& z : v) z /= q;
  }
  return {sigma, iters};
}

double sigma_max_lanczos(const ConvOperatorSpec& spec, double tol, int max_iter,
                         std::uint64_t seed) {
  // Iterate on the smaller of the two spaces; the normal operator there has
  // the same sigma_1^2 as its twin.
  const bool y_side = spec.out_dim() <= spec.in_dim();
  const int dim = y_side ? spec.out_dim() : spec.in_dim();
  if (max_iter <= 0) max_iter = std::min(dim, 600);
  const int iters = std::min(max_iter, dim);

  Rng rng(seed);
  std::vector<std::vector<double>> basis;
  std::vector<double> alpha, beta;
  std::vector<double> v(static_cast<std::size_t>(dim));
  for (auto& z : v) z = rng.gaussian();
  const double nv = norm2(v);
  if (nv == 0.0) return 0.0;
  for (auto& z : v) z /= nv;
  basis.push_back(v);

  double best = 0.0, prev = -1.0;
  int stall = 0;
  for (int it = 0; it < iters; ++it) {
    std::vector<double> w = y_side ? conv_apply(spec, adjoint_apply(spec, basis.back()))
                                   : adjoint_apply(spec, conv_apply(spec, basis.back()));
    alpha.push_back(dot(w, basis.back()));
    // Two full Gram-Schmidt passes; a single pass loses orthogonality once
    // the residual norm collapses, and the Ritz values then overshoot.
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) {
        const double c = dot(w, b);
        for (std::size_t q = 0; q < w.size(); ++q) w[q] -= c * b[q];
      }
    const double bn = norm2(w);

    const int m = static_cast<int>(alpha.size());
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
    for (int r = 0; r < m; ++r) {
      tri(r, r) = alpha[r];
      if (r) tri(r, r - 1) = tri(r - 1, r) = beta[r - 1];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri, Eigen::EigenvaluesOnly);
    best = std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));

    if (prev >= 0.0 && std::abs(best - prev) <= tol * std::max(best, 1e-300)) {
      if (++stall >= 3) break;
    } else {
      stall = 0;
    }
    prev = best;
    if (bn <= 1e-13 * std::max(1.0, best)) break;  // Krylov space exhausted
    beta.push_back(bn);
    for (auto& z : w) z /= bn;
    basis.push_back(std::move(w));
  }
  return best;
}

double sigma_max_exact(const ConvOperatorSpec& spec, double tol, int dense_cutoff) {
  const std::size_t rows = static_cast<std::size_t>(spec.out_dim());
  const std::size_t cols = static_cast<std::size_t>(spec.in_dim());
  if (std::max(rows, cols) <= static_cast<std::size_t>(dense_cutoff) &&
      rows * cols <= kMaterializeGuard)
    return sigma_max_dense(materialize(spec));
  return sigma_max_lanczos(spec, std::min(tol, 1e-10));
}

GapSeries gamma_series(const Kernel4& kernel, std::span<const int> ns, const GridSpec& grid) {
  GapSeries series;
  series.entries.reserve(ns.size());
  for (int n : ns) {
    const double lb = compute_lipbound(kernel, grid).bound;
    const double s1 = sigma_max_exact(ConvOperatorSpec(kernel, n));
    series.entries.push_back({n, lb, s1, lb - s1});
  }
  return series;
}

}  // namespace lipbound
