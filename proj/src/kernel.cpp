#include "lipbound/kernel.hpp"

#include <cmath>
#include <string>

#include "lipbound/errors.hpp"
#include "lipbound/random.hpp"

namespace lipbound {

Kernel4::Kernel4(int cout_, int cin_, int s_, std::vector<double> data_)
    : cout(cout_), cin(cin_), s(s_), data(std::move(data_)) {
  if (cout <= 0 || cin <= 0 || s <= 0)
    throw ValidationError("kernel dims must be positive, got cout=" + std::to_string(cout) +
                          " cin=" + std::to_string(cin) + " s=" + std::to_string(s));
  if (s % 2 == 0)
    throw UnsupportedShapeError("kernel side s=" + std::to_string(s) +
                                " is even; only odd kernels (same padding p=s/2) are supported");
  const std::size_t want = static_cast<std::size_t>(cout) * cin * s * s;
  if (data.size() != want)
    throw ValidationError("kernel data length " + std::to_string(data.size()) +
                          " does not match cout*cin*s*s = " + std::to_string(want));
  for (double v : data)
    if (!std::isfinite(v)) throw ValidationError("kernel contains a non-finite entry");
}

Kernel4 random_kernel(std::uint64_t seed, int cout, int cin, int s, const KernelDist& dist) {
  if (s > 0 && s % 2 == 0)
    throw UnsupportedShapeError("random_kernel: even s=" + std::to_string(s) + " not supported");
  Rng rng(seed);
  std::vector<double> data;
  data.resize(static_cast<std::size_t>(cout) * cin * s * s);
  if (const auto* g = std::get_if<GaussianDist>(&dist)) {
    for (auto& v : data) v = rng.gaussian(g->sigma);
  } else {
    const auto& u = std::get<UniformDist>(dist);
    for (auto& v : data) v = rng.uniform(u.a, u.b);
  }
  return Kernel4(cout, cin, s, std::move(data));
}

Kernel4 scaled(const Kernel4& k, double factor) {
  std::vector<double> data = k.data;
  for (auto& v : data) v *= factor;
  return Kernel4(k.cout, k.cin, k.s, std::move(data));
}

double frobenius_norm(const Kernel4& k) {
  double acc = 0.0;
  for (double v : k.data) acc += v * v;
  return std::sqrt(acc);
}

}  // namespace lipbound
