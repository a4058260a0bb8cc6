#include "lipbound/comparators.hpp"

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "lipbound/errors.hpp"

namespace lipbound {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

ComparatorResult sedghi_estimate(const Kernel4& kernel, int n) {
  if (n < kernel.s)
    throw ParameterError("sedghi_estimate: n=" + std::to_string(n) + " must be >= s=" +
                         std::to_string(kernel.s));
  const auto t0 = Clock::now();

  // 2-D DFT of each zero-padded slice, row-column decomposition. F[u][v] is
  // the cout x cin matrix of transformed values at that frequency pair.
  const int s = kernel.s;
  std::vector<std::complex<double>> twiddle(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    const double ang = -2.0 * 3.141592653589793238462643383279 * t / n;
    twiddle[t] = {std::cos(ang), std::sin(ang)};
  }
  const std::size_t pairs = static_cast<std::size_t>(kernel.cout) * kernel.cin;
  std::vector<std::complex<double>> spectra(pairs * n * n);
  std::vector<std::complex<double>> row_pass(static_cast<std::size_t>(s) * n);
  for (int i = 0; i < kernel.cout; ++i)
    for (int j = 0; j < kernel.cin; ++j) {
      for (int a = 0; a < s; ++a)
        for (int v = 0; v < n; ++v) {
          std::complex<double> acc{0.0, 0.0};
          for (int b = 0; b < s; ++b) acc += kernel.at(i, j, a, b) * twiddle[(b * v) % n];
          row_pass[static_cast<std::size_t>(a) * n + v] = acc;
        }
      auto* out = spectra.data() + (static_cast<std::size_t>(i) * kernel.cin + j) * n * n;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          std::complex<double> acc{0.0, 0.0};
          for (int a = 0; a < s; ++a)
            acc += row_pass[static_cast<std::size_t>(a) * n + v] * twiddle[(a * u) % n];
          out[u * n + v] = acc;
        }
    }

  double best = 0.0;
  Eigen::MatrixXcd freq_mat(kernel.cout, kernel.cin);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (kernel.cout == 1 || kernel.cin == 1) {
        double acc = 0.0;
        for (std::size_t p = 0; p < pairs; ++p)
          acc += std::norm(spectra[p * n * n + static_cast<std::size_t>(u) * n + v]);
        best = std::max(best, std::sqrt(acc));
      } else {
        for (int i = 0; i < kernel.cout; ++i)
          for (int j = 0; j < kernel.cin; ++j)
            freq_mat(i, j) =
                spectra[(static_cast<std::size_t>(i) * kernel.cin + j) * n * n +
                        static_cast<std::size_t>(u) * n + v];
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(freq_mat);
        best = std::max(best, svd.singularValues()(0));
      }
    }

  return {ComparatorResult::Method::sedghi, best, n, ms_since(t0)};
}

double frobenius_value(const Kernel4& kernel, FrobeniusVariant variant) {
  if (variant == FrobeniusVariant::plain) return frobenius_norm(kernel);
  const int rows = kernel.cout;
  const int cols = kernel.cin * kernel.s * kernel.s;
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      reshaped(kernel.data.data(), rows, cols);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(reshaped);
  return kernel.s * svd.singularValues()(0);
}

ComparatorResult frobenius_estimate(const Kernel4& kernel) {
  const auto t0 = Clock::now();
  const double value = frobenius_value(kernel, kFrobeniusDefault);
  return {ComparatorResult::Method::frobenius, value, std::nullopt, ms_since(t0)};
}

}  // namespace lipbound
