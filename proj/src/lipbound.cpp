#include "lipbound/lipbound.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "lipbound/trigpoly.hpp"

namespace lipbound {

namespace {

// Pairwise reduction; keeps the cout-sum deterministic independent of any
// future data-parallel split.
double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 4) {
    double acc = 0.0;
    for (double x : xs) acc += x;
    return acc;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.subspan(0, half)) + pairwise_sum(xs.subspan(half));
}

}  // namespace

double certified_factor(int degree, int samples) {
  if (degree < 0) throw ParameterError("certified_factor: degree must be >= 0");
  if (degree == 0) return 1.0;
  if (samples <= 2 * degree)
    throw CertificationError("certification impossible: S=" + std::to_string(samples) +
                             " <= 2d=" + std::to_string(2 * degree) +
                             "; raise the sample count above 2d");
  const double alpha = 2.0 * degree / samples;
  return 1.0 / (1.0 - alpha);
}

BoundReport compute_lipbound(const Kernel4& kernel, const GridSpec& grid) {
  const auto t0 = std::chrono::steady_clock::now();
  const PolyBank bank = poly_from_kernel(kernel);
  const int d = bank.degree();

  // Validate certification up front so an impossible request fails before any
  // work is done.
  const double factor = grid.certified ? certified_factor(d, grid.samples) : 1.0;

  BoundReport report;
  report.samples = grid.samples;
  report.alpha = grid.certified ? 2.0 * d / grid.samples : 0.0;
  report.per_out_channel.reserve(kernel.cout);
  report.argmax_freqs.reserve(kernel.cout);
  for (int i = 0; i < kernel.cout; ++i) {
    const GridMax m = polygrid_max(
        [&](double w1, double w2) { return channel_power(bank, i, w1, w2); }, grid.samples);
    report.per_out_channel.push_back(m.value);
    report.argmax_freqs.emplace_back(m.w1, m.w2);
  }
  report.raw_grid_bound = std::sqrt(pairwise_sum(report.per_out_channel));
  report.bound = factor * report.raw_grid_bound;

  const auto t1 = std::chrono::steady_clock::now();
  report.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return report;
}

double logsum_lipbound(std::span<const Kernel4> kernels, const GridSpec& grid) {
  double acc = 0.0;
  for (const Kernel4& k : kernels) {
    const double b = compute_lipbound(k, grid).bound;
    if (b <= 0.0)
      throw DomainError("logsum_lipbound: kernel has bound 0 (all-zero layer), log undefined");
    acc += std::log(b);
  }
  return acc;
}

}  // namespace lipbound
