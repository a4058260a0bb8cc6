#include "lipbound/trigpoly.hpp"

#include <cmath>
#include <string>

#include "lipbound/errors.hpp"

namespace lipbound {

namespace {

// exp(i h w) for h = -d..d, computed from the h=1 phasor to keep eval cheap.
void phase_table(int d, double w, std::complex<double>* out) {
  const std::complex<double> step(std::cos(w), std::sin(w));
  out[d] = {1.0, 0.0};
  for (int h = 1; h <= d; ++h) {
    out[d + h] = out[d + h - 1] * step;
    out[d - h] = std::conj(out[d + h]);
  }
}

}  // namespace

TrigPoly2::TrigPoly2(int degree)
    : d(degree), coeffs(static_cast<std::size_t>(2 * degree + 1) * (2 * degree + 1), 0.0) {
  if (degree < 0) throw ParameterError("polynomial degree must be >= 0");
}

TrigPoly2::TrigPoly2(int degree, std::vector<double> c) : d(degree), coeffs(std::move(c)) {
  if (degree < 0) throw ParameterError("polynomial degree must be >= 0");
  const std::size_t want = static_cast<std::size_t>(2 * degree + 1) * (2 * degree + 1);
  if (coeffs.size() != want)
    throw ParameterError("coefficient array length " + std::to_string(coeffs.size()) +
                         " does not match (2d+1)^2 = " + std::to_string(want));
  for (double v : coeffs)
    if (!std::isfinite(v)) throw ValidationError("polynomial has a non-finite coefficient");
}

std::complex<double> TrigPoly2::eval(double w1, double w2) const {
  const int n = side();
  std::vector<std::complex<double>> e1(n), e2(n);
  phase_table(d, w1, e1.data());
  phase_table(d, w2, e2.data());
  std::complex<double> acc{0.0, 0.0};
  for (int a = 0; a < n; ++a) {
    std::complex<double> row{0.0, 0.0};
    const double* c = coeffs.data() + static_cast<std::size_t>(a) * n;
    for (int b = 0; b < n; ++b) row += c[b] * e2[b];
    acc += e1[a] * row;
  }
  return acc;
}

PolyBank poly_from_kernel(const Kernel4& kernel) {
  const int d = kernel.degree();
  PolyBank bank{kernel.cout, kernel.cin, {}};
  bank.polys.reserve(static_cast<std::size_t>(kernel.cout) * kernel.cin);
  for (int i = 0; i < kernel.cout; ++i)
    for (int j = 0; j < kernel.cin; ++j) {
      TrigPoly2 p(d);
      for (int h1 = -d; h1 <= d; ++h1)
        for (int h2 = -d; h2 <= d; ++h2) p.coeff(h1, h2) = kernel.at(i, j, d + h1, d - h2);
      bank.polys.push_back(std::move(p));
    }
  return bank;
}

double channel_power(const PolyBank& bank, int out_index, double w1, double w2) {
  if (out_index < 0 || out_index >= bank.cout)
    throw ParameterError("out_index " + std::to_string(out_index) + " out of range [0, " +
                         std::to_string(bank.cout) + ")");
  const int d = bank.degree();
  const int n = 2 * d + 1;
  std::vector<std::complex<double>> e1(n), e2(n);
  phase_table(d, w1, e1.data());
  phase_table(d, w2, e2.data());
  double power = 0.0;
  for (int j = 0; j < bank.cin; ++j) {
    const TrigPoly2& p = bank.poly(out_index, j);
    std::complex<double> acc{0.0, 0.0};
    for (int a = 0; a < n; ++a) {
      std::complex<double> row{0.0, 0.0};
      const double* c = p.coeffs.data() + static_cast<std::size_t>(a) * n;
      for (int b = 0; b < n; ++b) row += c[b] * e2[b];
      acc += e1[a] * row;
    }
    power += std::norm(acc);
  }
  return power;
}

TrigPoly2 poly_mul(const TrigPoly2& f, const TrigPoly2& g) {
  TrigPoly2 p(f.d + g.d);
  for (int a1 = -f.d; a1 <= f.d; ++a1)
    for (int a2 = -f.d; a2 <= f.d; ++a2) {
      const double fc = f.coeff(a1, a2);
      if (fc == 0.0) continue;
      for (int b1 = -g.d; b1 <= g.d; ++b1)
        for (int b2 = -g.d; b2 <= g.d; ++b2)
          p.coeff(a1 + b1, a2 + b2) += fc * g.coeff(b1, b2);
    }
  return p;
}

TrigPoly2 poly_conj(const TrigPoly2& f) {
  TrigPoly2 p(f.d);
  for (int h1 = -f.d; h1 <= f.d; ++h1)
    for (int h2 = -f.d; h2 <= f.d; ++h2) p.coeff(h1, h2) = f.coeff(-h1, -h2);
  return p;
}

}  // namespace lipbound
