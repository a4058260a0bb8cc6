#pragma once

// Test-only oracles, algorithmically independent of the library paths they
// check.

#include <complex>
#include <span>
#include <vector>

#include "lipbound/dense_mat.hpp"
#include "lipbound/random.hpp"
#include "lipbound/trigpoly.hpp"

namespace testsup {

/// Largest singular value by one-sided Jacobi (Hestenes) rotations on the
/// columns. Independent of the library's Gram-eigensolve route.
double hestenes_sigma_max(const lipbound::DenseMat& m);

/// Brute-force sup of |f| over the S x S grid {2pi k/S, k=1..S}.
double grid_sup_modulus(const lipbound::TrigPoly2& f, int samples);

lipbound::TrigPoly2 random_poly(lipbound::Rng& rng, int degree);

/// Block Toeplitz matrix from blocks B_h (m x m each, h = -(nb-1)..nb-1),
/// block (I, J) = B_{J-I}.
lipbound::DenseMat block_toeplitz(std::span<const lipbound::DenseMat> blocks, int nb);

/// sigma_1 of a small complex matrix via the hermitian Gram's largest
/// eigenvalue (power iteration with fixed start; sizes <= 4 here).
double sigma_complex(const std::vector<std::vector<std::complex<double>>>& a);

}  // namespace testsup
