#include "support.hpp"

#include <algorithm>
#include <cmath>

namespace testsup {

using lipbound::DenseMat;
using lipbound::Rng;
using lipbound::TrigPoly2;

double hestenes_sigma_max(const DenseMat& m) {
  // Work on columns of the tall orientation.
  DenseMat a = m.rows >= m.cols ? m : lipbound::transpose(m);
  const int rows = a.rows, cols = a.cols;
  auto col_dot = [&](int p, int q) {
    double acc = 0.0;
    for (int r = 0; r < rows; ++r) acc += a.at(r, p) * a.at(r, q);
    return acc;
  };
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < cols - 1; ++p)
      for (int q = p + 1; q < cols; ++q) {
        const double app = col_dot(p, p), aqq = col_dot(q, q), apq = col_dot(p, q);
        if (std::abs(apq) <= 1e-15 * std::sqrt(app * aqq) + 1e-300) continue;
        rotated = true;
        const double zeta = (aqq - app) / (2.0 * apq);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double cs = 1.0 / std::sqrt(1.0 + t * t), sn = cs * t;
        for (int r = 0; r < rows; ++r) {
          const double vp = a.at(r, p), vq = a.at(r, q);
          a.at(r, p) = cs * vp - sn * vq;
          a.at(r, q) = sn * vp + cs * vq;
        }
      }
    if (!rotated) break;
  }
  double best = 0.0;
  for (int c = 0; c < cols; ++c) best = std::max(best, col_dot(c, c));
  return std::sqrt(best);
}

double grid_sup_modulus(const TrigPoly2& f, int samples) {
  const int n = f.side();
  const double step = 2.0 * 3.141592653589793238462643383279 / samples;
  double best = 0.0;
  std::vector<std::complex<double>> row(n);
  for (int i = 1; i <= samples; ++i) {
    const double w1 = i * step;
    // collapse the h1 sum once per row of the grid
    for (int b = 0; b < n; ++b) {
      std::complex<double> acc{0.0, 0.0};
      for (int a = 0; a < n; ++a) {
        const double h1 = a - f.d;
        acc += f.coeffs[static_cast<std::size_t>(a) * n + b] *
               std::complex<double>(std::cos(h1 * w1), std::sin(h1 * w1));
      }
      row[b] = acc;
    }
    for (int j = 1; j <= samples; ++j) {
      const double w2 = j * step;
      std::complex<double> acc{0.0, 0.0};
      for (int b = 0; b < n; ++b) {
        const double h2 = b - f.d;
        acc += row[b] * std::complex<double>(std::cos(h2 * w2), std::sin(h2 * w2));
      }
      best = std::max(best, std::abs(acc));
    }
  }
  return best;
}

TrigPoly2 random_poly(Rng& rng, int degree) {
  TrigPoly2 p(degree);
  for (auto& c : p.coeffs) c = rng.gaussian();
  return p;
}

DenseMat block_toeplitz(std::span<const DenseMat> blocks, int nb) {
  const int m = blocks.front().rows;
  DenseMat out(nb * m, nb * m);
  for (int bi = 0; bi < nb; ++bi)
    for (int bj = 0; bj < nb; ++bj) {
      const DenseMat& blk = blocks[static_cast<std::size_t>(bj - bi + nb - 1)];
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) out.at(bi * m + r, bj * m + c) = blk.at(r, c);
    }
  return out;
}

double sigma_complex(const std::vector<std::vector<std::complex<double>>>& a) {
  const std::size_t rows = a.size(), cols = a.front().size();
  // gram = A^H A
  std::vector<std::vector<std::complex<double>>> g(cols,
                                                   std::vector<std::complex<double>>(cols));
  for (std::size_t p = 0; p < cols; ++p)
    for (std::size_t q = 0; q < cols; ++q) {
      std::complex<double> acc{0.0, 0.0};
      for (std::size_t r = 0; r < rows; ++r) acc += std::conj(a[r][p]) * a[r][q];
      g[p][q] = acc;
    }
  std::vector<std::complex<double>> v(cols, {1.0, 0.3});
  double lam = 0.0;
  for (int it = 0; it < 500; ++it) {
    std::vector<std::complex<double>> u(cols, {0.0, 0.0});
    for (std::size_t p = 0; p < cols; ++p)
      for (std::size_t q = 0; q < cols; ++q) u[p] += g[p][q] * v[q];
    double norm = 0.0;
    for (const auto& z : u) norm += std::norm(z);
    norm = std::sqrt(norm);
    if (norm == 0.0) return 0.0;
    lam = norm;
    for (std::size_t p = 0; p < cols; ++p) v[p] = u[p] / norm;
  }
  return std::sqrt(lam);
}

}  // namespace testsup
