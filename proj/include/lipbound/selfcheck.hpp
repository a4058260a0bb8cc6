#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lipbound {

struct CheckResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  double worst = 0.0;  // worst observed residual / margin, diagnostic only
};

/// Randomized property suite behind the CLI's `check` command: operator
/// materialization vs direct convolution, adjoint identity, the product
/// decomposition residual, PSD residual, certified dominance, the Toeplitz
/// symbol bound and the concatenation bound. Deterministic for a fixed seed.
std::vector<CheckResult> run_selfchecks(std::uint64_t seed);

}  // namespace lipbound
