#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "lipbound/errors.hpp"
#include "lipbound/random.hpp"
#include "lipbound/toeplitz_ops.hpp"

#include "support.hpp"

using namespace lipbound;

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

TrigPoly2 constant_poly(double c) {
  TrigPoly2 p(0);
  p.coeff(0, 0) = c;
  return p;
}
}  // namespace

TEST_CASE("toeplitz_from_symbol") {
  SUBCASE("a_0 = 1 gives the identity") {
    const std::vector<double> coeffs{0, 0, 1, 0, 0};
    CHECK(max_abs(sub(toeplitz_from_symbol(coeffs, 3), DenseMat::identity(3))) == 0.0);
  }

  SUBCASE("a_1 = 1 gives the superdiagonal shift") {
    std::vector<double> coeffs(5, 0.0);
    coeffs[3] = 1.0;  // h = +1
    const DenseMat m = toeplitz_from_symbol(coeffs, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(m.at(i, j) == (j == i + 1 ? 1.0 : 0.0));
  }

  SUBCASE("length must be 2n-1") {
    CHECK_THROWS_AS(toeplitz_from_symbol(std::vector<double>(4, 0.0), 3), ValidationError);
  }

  SUBCASE("sigma_1 is bounded by the symbol's sup-modulus") {
    Rng rng(81);
    for (int t = 0; t < 8; ++t) {
      const int n = 4 + static_cast<int>(rng.next_u64() % 29);
      std::vector<double> coeffs(static_cast<std::size_t>(2 * n - 1));
      for (auto& c : coeffs) c = rng.gaussian();
      const double s1 = sigma_max_dense(toeplitz_from_symbol(coeffs, n));
      double sup = 0.0;
      for (int q = 1; q <= 4096; ++q) {
        const double w = kTwoPi * q / 4096;
        std::complex<double> acc{0.0, 0.0};
        for (int h = -(n - 1); h <= n - 1; ++h)
          acc += coeffs[static_cast<std::size_t>(h + n - 1)] *
                 std::complex<double>(std::cos(h * w), std::sin(h * w));
        sup = std::max(sup, std::abs(acc));
      }
      CHECK(s1 <= sup + 1e-6);
    }
  }
}

TEST_CASE("block Toeplitz symbol bound (matrix-valued)") {
  Rng rng(82);
  for (int t = 0; t < 5; ++t) {
    const int nb = 4 + static_cast<int>(rng.next_u64() % 5);
    std::vector<DenseMat> blocks;
    for (int h = 0; h < 2 * nb - 1; ++h) {
      DenseMat b(2, 2);
      for (auto& v : b.data) v = rng.gaussian();
      blocks.push_back(std::move(b));
    }
    const double s1 = sigma_max_dense(testsup::block_toeplitz(blocks, nb));
    double sup = 0.0;
    for (int q = 1; q <= 2048; ++q) {
      const double w = kTwoPi * q / 2048;
      std::vector<std::vector<std::complex<double>>> f(2,
                                                       std::vector<std::complex<double>>(2));
      for (int h = -(nb - 1); h <= nb - 1; ++h) {
        const std::complex<double> ph(std::cos(h * w), std::sin(h * w));
        const DenseMat& b = blocks[static_cast<std::size_t>(h + nb - 1)];
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c) f[r][c] += b.at(r, c) * ph;
      }
      sup = std::max(sup, testsup::sigma_complex(f));
    }
    CHECK(s1 <= sup + 1e-6);
  }
}

TEST_CASE("dbt_from_poly") {
  SUBCASE("constant polynomial gives c * I") {
    const DenseMat m = dbt_from_poly(constant_poly(2.5), 3);
    DenseMat expect = DenseMat::identity(9);
    for (auto& v : expect.data) v *= 2.5;
    CHECK(max_abs(sub(m, expect)) == 0.0);
  }

  SUBCASE("entries follow the block/inner offset decomposition") {
    Rng rng(83);
    const TrigPoly2 f = testsup::random_poly(rng, 1);
    const int n = 4;
    const DenseMat m = dbt_from_poly(f, n);
    for (int i = 0; i < n * n; ++i)
      for (int j = 0; j < n * n; ++j)
        CHECK(m.at(i, j) == f.coeff(j / n - i / n, j % n - i % n));
  }
}

TEST_CASE("hankel_materialize") {
  SUBCASE("zero polynomial gives zero matrices") {
    const TrigPoly2 zero(1);
    for (auto v : {HankelVariant::alpha0, HankelVariant::alpha1, HankelVariant::alpha2,
                   HankelVariant::alpha3})
      CHECK(max_abs(hankel_materialize(zero, 3, v)) == 0.0);
  }

  SUBCASE("constant polynomial vanishes under alpha0: the block index is never 0") {
    CHECK(max_abs(hankel_materialize(constant_poly(3.0), 2, HankelVariant::alpha0)) == 0.0);
  }

  SUBCASE("alpha3 touches only the top-right boundary blocks") {
    Rng rng(84);
    const TrigPoly2 f = testsup::random_poly(rng, 1);
    const int n = 5;
    const DenseMat m = hankel_materialize(f, n, HankelVariant::alpha3);
    bool any_nonzero = false;
    for (int i = 0; i < n * n; ++i)
      for (int j = 0; j < n * n; ++j) {
        if (j / n - i / n < n - f.d) CHECK(m.at(i, j) == 0.0);
        if (m.at(i, j) != 0.0) any_nonzero = true;
      }
    CHECK(any_nonzero);
  }
}

TEST_CASE("widom residual") {
  SUBCASE("constants: exact zero") {
    CHECK(widom_residual(constant_poly(1.0), constant_poly(1.0), 3) == 0.0);
  }

  SUBCASE("random degree-1 pairs across n = 4..8") {
    Rng rng(85);
    for (int n = 4; n <= 8; ++n) {
      const TrigPoly2 f = testsup::random_poly(rng, 1);
      const TrigPoly2 g = testsup::random_poly(rng, 1);
      CHECK(widom_residual(f, g, n) <= 1e-10);
    }
  }

  SUBCASE("conjugate pair (f, f*)") {
    Rng rng(86);
    const TrigPoly2 f = testsup::random_poly(rng, 1);
    CHECK(widom_residual(f, poly_conj(f), 5) <= 1e-10);
  }

  SUBCASE("mixed degrees") {
    Rng rng(87);
    const TrigPoly2 f = testsup::random_poly(rng, 2);
    const TrigPoly2 g = testsup::random_poly(rng, 1);
    CHECK(widom_residual(f, g, 6) <= 1e-10);
  }

  SUBCASE("degree guard") {
    Rng rng(88);
    const TrigPoly2 f = testsup::random_poly(rng, 2);
    CHECK_THROWS_AS(widom_residual(f, f, 4), ParameterError);
  }
}

TEST_CASE("psd residual") {
  SUBCASE("constant polynomial: residual is the zero matrix") {
    CHECK(psd_residual_min_eig(constant_poly(1.5), 3) == 0.0);
  }

  SUBCASE("random degree-1 polynomials stay PSD") {
    Rng rng(89);
    for (int t = 0; t < 6; ++t)
      CHECK(psd_residual_min_eig(testsup::random_poly(rng, 1), 6) >= -1e-9);
  }

  SUBCASE("single off-center coefficient") {
    TrigPoly2 f(1);
    f.coeff(1, 1) = 1.0;
    CHECK(psd_residual_min_eig(f, 6) >= -1e-9);
  }

  SUBCASE("degree guard") {
    CHECK_THROWS_AS(psd_residual_min_eig(TrigPoly2(2), 4), ParameterError);
  }
}

TEST_CASE("concatenation bound") {
  SUBCASE("two identity blocks achieve equality at sqrt(2)") {
    std::vector<DenseMat> mats{DenseMat::identity(4), DenseMat::identity(4)};
    const auto [lhs, rhs] = concat_bound_check(mats);
    CHECK(lhs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(rhs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  }

  SUBCASE("[A, 0] collapses to sigma_1(A)") {
    Rng rng(90);
    DenseMat a(4, 4);
    for (auto& v : a.data) v = rng.gaussian();
    std::vector<DenseMat> mats{a, DenseMat(4, 3)};
    const auto [lhs, rhs] = concat_bound_check(mats);
    const double s1 = sigma_max_dense(a);
    CHECK(lhs == doctest::Approx(s1).epsilon(1e-12));
    CHECK(rhs == doctest::Approx(s1).epsilon(1e-12));
  }

  SUBCASE("random families satisfy the bound") {
    Rng rng(91);
    for (int t = 0; t < 5; ++t) {
      std::vector<DenseMat> mats;
      for (int m = 0; m < 5; ++m) {
        DenseMat a(8, 8);
        for (auto& v : a.data) v = rng.gaussian();
        mats.push_back(std::move(a));
      }
      const auto [lhs, rhs] = concat_bound_check(mats);
      CHECK(lhs <= rhs + 1e-10);
    }
  }
}
