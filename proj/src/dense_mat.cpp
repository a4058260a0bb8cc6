#include "lipbound/dense_mat.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "lipbound/errors.hpp"

namespace lipbound {

namespace {

using EigenRowMat =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EigenRowMat> as_eigen(const DenseMat& m) {
  return {m.data.data(), m.rows, m.cols};
}

void check_finite(const DenseMat& m, const char* who) {
  for (double v : m.data)
    if (!std::isfinite(v)) throw ValidationError(std::string(who) + ": non-finite matrix entry");
}

}  // namespace

DenseMat::DenseMat(int rows_, int cols_)
    : rows(rows_), cols(cols_), data(static_cast<std::size_t>(rows_) * cols_, 0.0) {
  if (rows_ <= 0 || cols_ <= 0) throw ParameterError("DenseMat dims must be positive");
}

DenseMat::DenseMat(int rows_, int cols_, std::vector<double> data_)
    : rows(rows_), cols(cols_), data(std::move(data_)) {
  if (rows_ <= 0 || cols_ <= 0) throw ParameterError("DenseMat dims must be positive");
  if (data.size() != static_cast<std::size_t>(rows_) * cols_)
    throw ValidationError("DenseMat data length does not match rows*cols");
}

DenseMat DenseMat::identity(int n) {
  DenseMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

DenseMat DenseMat::anti_identity(int n) {
  DenseMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, n - 1 - i) = 1.0;
  return m;
}

DenseMat matmul(const DenseMat& a, const DenseMat& b) {
  if (a.cols != b.rows) throw ValidationError("matmul: inner dimensions disagree");
  DenseMat out(a.rows, b.cols);
  Eigen::Map<EigenRowMat>(out.data.data(), out.rows, out.cols) = as_eigen(a) * as_eigen(b);
  return out;
}

DenseMat transpose(const DenseMat& a) {
  DenseMat out(a.cols, a.rows);
  for (int r = 0; r < a.rows; ++r)
    for (int c = 0; c < a.cols; ++c) out.at(c, r) = a.at(r, c);
  return out;
}

DenseMat add(const DenseMat& a, const DenseMat& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw ValidationError("add: shape mismatch");
  DenseMat out = a;
  for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] += b.data[i];
  return out;
}

DenseMat sub(const DenseMat& a, const DenseMat& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw ValidationError("sub: shape mismatch");
  DenseMat out = a;
  for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] -= b.data[i];
  return out;
}

DenseMat hconcat(std::span<const DenseMat> mats) {
  if (mats.empty()) throw ParameterError("hconcat: empty list");
  const int rows = mats.front().rows;
  int cols = 0;
  for (const DenseMat& m : mats) {
    if (m.rows != rows) throw ValidationError("hconcat: row counts disagree");
    cols += m.cols;
  }
  DenseMat out(rows, cols);
  int off = 0;
  for (const DenseMat& m : mats) {
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < m.cols; ++c) out.at(r, off + c) = m.at(r, c);
    off += m.cols;
  }
  return out;
}

double max_abs(const DenseMat& a) {
  double worst = 0.0;
  for (double v : a.data) worst = std::max(worst, std::abs(v));
  return worst;
}

double sigma_max_dense(const DenseMat& m) {
  check_finite(m, "sigma_max_dense");
  const auto a = as_eigen(m);
  // Eigensolve the smaller Gram matrix; for sigma_1 the squared conditioning
  // is harmless.
  Eigen::MatrixXd gram;
  if (m.rows <= m.cols)
    gram = a * a.transpose();
  else
    gram = a.transpose() * a;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double min_eig_sym(const DenseMat& m) {
  if (m.rows != m.cols) throw ValidationError("min_eig_sym: matrix not square");
  check_finite(m, "min_eig_sym");
  const auto a = as_eigen(m);
  Eigen::MatrixXd sym = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace lipbound
