#pragma once

#include <span>
#include <vector>

namespace lipbound {

/// Dense real matrix, row-major. The oracle suite's workhorse; it exists to
/// be trusted, not fast.
struct DenseMat {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  DenseMat() = default;
  DenseMat(int rows, int cols);  // zero-initialized
  DenseMat(int rows, int cols, std::vector<double> data);

  double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
  double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }

  static DenseMat identity(int n);
  /// Exchange matrix (ones on the anti-diagonal).
  static DenseMat anti_identity(int n);
};

DenseMat matmul(const DenseMat& a, const DenseMat& b);
DenseMat transpose(const DenseMat& a);
DenseMat add(const DenseMat& a, const DenseMat& b);
DenseMat sub(const DenseMat& a, const DenseMat& b);
DenseMat hconcat(std::span<const DenseMat> mats);  // equal row counts

double max_abs(const DenseMat& a);

/// Largest singular value; relative accuracy ~1e-14 on well-scaled input
/// (symmetric eigensolve of the smaller Gram matrix). Throws ValidationError
/// on non-finite entries.
double sigma_max_dense(const DenseMat& m);

/// Smallest eigenvalue of a symmetric matrix (input is symmetrized first).
double min_eig_sym(const DenseMat& m);

}  // namespace lipbound
