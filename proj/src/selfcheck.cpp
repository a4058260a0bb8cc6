#include "lipbound/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "lipbound/conv_oracle.hpp"
#include "lipbound/kernel.hpp"
#include "lipbound/lipbound.hpp"
#include "lipbound/random.hpp"
#include "lipbound/toeplitz_ops.hpp"
#include "lipbound/trigpoly.hpp"

namespace lipbound {

namespace {

double linf(std::span<const double> a, std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double linf(std::span<const double> xs) {
  double worst = 0.0;
  for (double v : xs) worst = std::max(worst, std::abs(v));
  return worst;
}

double l1(std::span<const double> xs) {
  double acc = 0.0;
  for (double x : xs) acc += std::abs(x);
  return acc;
}

TrigPoly2 random_poly(Rng& rng, int degree) {
  TrigPoly2 p(degree);
  for (auto& c : p.coeffs) c = rng.gaussian();
  return p;
}

}  // namespace

std::vector<CheckResult> run_selfchecks(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CheckResult> results;

  {  // M vec(x) == conv_apply(x)
    CheckResult r{"materialize-equality", 0, 0, 0.0};
    for (int t = 0; t < 20; ++t) {
      const int cout = 1 + static_cast<int>(rng.next_u64() % 3);
      const int cin = 1 + static_cast<int>(rng.next_u64() % 3);
      const int s = 1 + 2 * static_cast<int>(rng.next_u64() % 3);
      const int n = 3 + static_cast<int>(rng.next_u64() % 8);
      const Kernel4 k = random_kernel(rng.next_u64(), cout, cin, s);
      const ConvOperatorSpec spec(k, n);
      const DenseMat m = materialize(spec);
      std::vector<double> x(static_cast<std::size_t>(spec.in_dim()));
      for (auto& v : x) v = rng.gaussian();
      std::vector<double> mx(static_cast<std::size_t>(spec.out_dim()), 0.0);
      for (int row = 0; row < m.rows; ++row) {
        double acc = 0.0;
        for (int col = 0; col < m.cols; ++col) acc += m.at(row, col) * x[col];
        mx[row] = acc;
      }
      const double diff = linf(mx, conv_apply(spec, x));
      const double tol = 1e-12 * std::max(1.0, l1(k.data)) * std::max(1.0, linf(x));
      r.trials++;
      r.worst = std::max(r.worst, diff);
      if (diff > tol) r.failures++;
    }
    results.push_back(r);
  }

  {  // <Ax, y> == <x, A^T y>
    CheckResult r{"adjoint-identity", 0, 0, 0.0};
    for (int t = 0; t < 20; ++t) {
      const int cout = 1 + static_cast<int>(rng.next_u64() % 3);
      const int cin = 1 + static_cast<int>(rng.next_u64() % 3);
      const int n = 3 + static_cast<int>(rng.next_u64() % 8);
      const Kernel4 k = random_kernel(rng.next_u64(), cout, cin, 3);
      const ConvOperatorSpec spec(k, n);
      std::vector<double> x(static_cast<std::size_t>(spec.in_dim()));
      std::vector<double> y(static_cast<std::size_t>(spec.out_dim()));
      for (auto& v : x) v = rng.gaussian();
      for (auto& v : y) v = rng.gaussian();
      const auto ax = conv_apply(spec, x);
      const auto aty = adjoint_apply(spec, y);
      double lhs = 0.0, rhs = 0.0, nx = 0.0, ny = 0.0;
      for (std::size_t i = 0; i < ax.size(); ++i) lhs += ax[i] * y[i];
      for (std::size_t i = 0; i < x.size(); ++i) rhs += x[i] * aty[i];
      for (double v : x) nx += v * v;
      for (double v : y) ny += v * v;
      const double tol = 1e-12 * std::sqrt(nx * ny) * std::max(1.0, l1(k.data));
      const double diff = std::abs(lhs - rhs);
      r.trials++;
      r.worst = std::max(r.worst, diff);
      if (diff > tol) r.failures++;
    }
    results.push_back(r);
  }

  {  // product decomposition residual
    CheckResult r{"widom-identity", 0, 0, 0.0};
    for (int t = 0; t < 15; ++t) {
      const int n = 4 + static_cast<int>(rng.next_u64() % 5);
      const TrigPoly2 f = random_poly(rng, 1), g = random_poly(rng, 1);
      const double res = widom_residual(f, g, n);
      r.trials++;
      r.worst = std::max(r.worst, res);
      if (res > 1e-10) r.failures++;
    }
    results.push_back(r);
  }

  {  // PSD residual
    CheckResult r{"psd-residual", 0, 0, 0.0};
    for (int t = 0; t < 15; ++t) {
      const int n = 4 + static_cast<int>(rng.next_u64() % 5);
      const TrigPoly2 f = random_poly(rng, 1);
      const double eig = psd_residual_min_eig(f, n);
      r.trials++;
      r.worst = std::min(r.worst, eig);
      if (eig < -1e-9) r.failures++;
    }
    results.push_back(r);
  }

  {  // certified bound dominates exact sigma_1
    CheckResult r{"certified-dominance", 0, 0, 0.0};
    for (int t = 0; t < 25; ++t) {
      const int cout = 1 + static_cast<int>(rng.next_u64() % 3);
      const int cin = 1 + static_cast<int>(rng.next_u64() % 3);
      const int s = 1 + 2 * static_cast<int>(rng.next_u64() % 2);
      const Kernel4 k = random_kernel(rng.next_u64(), cout, cin, s);
      const double bound = compute_lipbound(k, {10, true}).bound;
      for (int n : {4, 8}) {
        const double s1 = sigma_max_exact(ConvOperatorSpec(k, n));
        r.trials++;
        r.worst = std::min(r.worst, bound - s1);
        if (bound < s1 - 1e-9) r.failures++;
      }
    }
    results.push_back(r);
  }

  {  // sigma_1(T(a)) <= sup |sum a_h e^{ihw}|
    CheckResult r{"toeplitz-symbol-bound", 0, 0, 0.0};
    for (int t = 0; t < 10; ++t) {
      const int n = 4 + static_cast<int>(rng.next_u64() % 13);
      std::vector<double> coeffs(static_cast<std::size_t>(2 * n - 1));
      for (auto& c : coeffs) c = rng.gaussian();
      const double s1 = sigma_max_dense(toeplitz_from_symbol(coeffs, n));
      double sup = 0.0;
      for (int q = 0; q < 4096; ++q) {
        const double w = 2.0 * 3.141592653589793238462643383279 * q / 4096;
        std::complex<double> acc{0.0, 0.0};
        for (int h = -(n - 1); h <= n - 1; ++h)
          acc += coeffs[static_cast<std::size_t>(h + n - 1)] *
                 std::complex<double>(std::cos(h * w), std::sin(h * w));
        sup = std::max(sup, std::abs(acc));
      }
      r.trials++;
      r.worst = std::min(r.worst, sup - s1);
      if (s1 > sup + 1e-6) r.failures++;
    }
    results.push_back(r);
  }

  {  // sigma_1([A_1..A_p]) <= sqrt(sum sigma_1^2)
    CheckResult r{"concat-bound", 0, 0, 0.0};
    for (int t = 0; t < 10; ++t) {
      const int count = 2 + static_cast<int>(rng.next_u64() % 4);
      const int rows = 4 + static_cast<int>(rng.next_u64() % 5);
      std::vector<DenseMat> mats;
      for (int m = 0; m < count; ++m) {
        DenseMat a(rows, 3 + static_cast<int>(rng.next_u64() % 5));
        for (auto& v : a.data) v = rng.gaussian();
        mats.push_back(std::move(a));
      }
      const auto [lhs, rhs] = concat_bound_check(mats);
      r.trials++;
      r.worst = std::min(r.worst, rhs - lhs);
      if (lhs > rhs + 1e-10) r.failures++;
    }
    results.push_back(r);
  }

  return results;
}

}  // namespace lipbound
