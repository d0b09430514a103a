// SPDX-License-Identifier: Apache-2.0
#include "aprank/linf_estimate.hpp"

#include <cmath>

#include "aprank/rng.hpp"

namespace aprank {

LinfEstimate estimate_linf(const Decomposition& D, double epsilon, std::uint64_t seed,
                           const ExpansionBudget& budget, std::int64_t mc_samples) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw InvalidArgument("estimate_linf needs epsilon in (0,1)");
  const int n = D.vars();
  const int d = D.degree();
  if (d < 1) throw InvalidArgument("estimate_linf needs degree >= 1");

  SparsifyConfig sc;
  sc.norm = NormSpec::hs(); // HS error dominates the sup-norm error
  sc.epsilon = epsilon;
  sc.seed = derive_seed(seed, 0xE51);
  sc.budget = budget;
  sc.mc_samples = mc_samples;
  SparsifyResult sp = maurey_sparsify(D, sc);

  const int k = std::max<int>(
      1, static_cast<int>(std::ceil(n / epsilon *
                                    std::log(std::exp(1.0) * d / epsilon))));

  SymmetricTensor q = materialize(sp.sparse);
  EstimateResult qn;
  try {
    qn = {lr_exact_even(q, 2 * k, budget), 0.0, 0, EstimateMethod::exact};
  } catch (const BudgetExceeded&) {
    qn = lr_monte_carlo(q, 2.0 * k, mc_samples, derive_seed(seed, 0xE52));
  }

  LinfEstimate out;
  out.k = k;
  out.q_norm = qn;
  out.sparse_rank = sp.sparse.size();
  out.barvinok_factor = barvinok_bracket(n, d, k).upper_factor;
  out.lower = qn.value - epsilon;
  out.upper = out.barvinok_factor * qn.value + epsilon;
  return out;
}

} // namespace aprank
