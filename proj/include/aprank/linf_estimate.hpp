// SPDX-License-Identifier: Apache-2.0
#ifndef APRANK_LINF_ESTIMATE_HPP
#define APRANK_LINF_ESTIMATE_HPP

#include <cstdint>

#include "aprank/norms.hpp"
#include "aprank/sparsify.hpp"
#include "aprank/tensor.hpp"

namespace aprank {

struct LinfEstimate {
  double lower = 0.0;          // ||q||_2k - eps
  double upper = 0.0;          // C(kd+n-1,kd)^(1/2k) ||q||_2k + eps
  int k = 0;                   // ceil((n/eps) ln(ed/eps))
  EstimateResult q_norm;       // the L_2k estimate of the sparsified tensor
  std::int64_t sparse_rank = 0;
  double barvinok_factor = 1.0;
};

// Sup-norm bracket for materialize(D): sparsify to HS error eps, then bound
// ||q||_inf through L_2k with the exact binomial comparison factor.
LinfEstimate estimate_linf(const Decomposition& D, double epsilon,
                           std::uint64_t seed = 0,
                           const ExpansionBudget& budget = {},
                           std::int64_t mc_samples = 100'000);

} // namespace aprank

#endif
