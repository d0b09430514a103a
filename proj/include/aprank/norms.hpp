// SPDX-License-Identifier: Apache-2.0
#ifndef APRANK_NORMS_HPP
#define APRANK_NORMS_HPP

#include <cstdint>
#include <span>
#include <string>

#include "aprank/tensor.hpp"

namespace aprank {

enum class EstimateMethod { exact, monte_carlo, covering };

std::string method_name(EstimateMethod m);

/// A norm value with its statistical error bar and sample provenance.
/// std_error == 0 iff the method is exact.
struct EstimateResult {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
  EstimateMethod method = EstimateMethod::exact;
};

/// Size/work limits for the symbolic even-r path.
struct ExpansionBudget {
  std::int64_t max_monomials = 2'000'000; // dim of f^{r} in the monomial index
  double max_pair_work = 1.5e9;           // accumulated coefficient-pair products
};

// Uniform-measure monomial moment over S^{n-1}: zero when any beta_i is odd,
// else prod (2g_i - 1)!! / prod_{j<|g|} (n + 2j) with beta = 2g.
double sphere_moment(int n, std::span<const std::int32_t> beta);

// Integral of f over the sphere: coefficient-by-coefficient moments.
double integrate_sphere(const SymmetricTensor& f);

// Exact L_r for even integer r: forms f^{r/2} symbolically, integrates its
// square term-by-term. Throws BudgetExceeded (pointing at lr_monte_carlo)
// when the expansion exceeds the budget.
double lr_exact_even(const SymmetricTensor& f, int r, const ExpansionBudget& budget = {});

// Plain Monte Carlo estimate of L_r for real r >= 2; std_error by the delta
// method; bit-deterministic given the seed, for any thread count.
EstimateResult lr_monte_carlo(const SymmetricTensor& f, double r,
                              std::int64_t samples, std::uint64_t seed);

// max |f(x_i)| over the given points: always a valid lower bound for the
// sup-norm. Throws InvalidArgument on an empty list.
double linf_lower(const SymmetricTensor& f, std::span<const UnitVector> points);

/// L_2k vs L_inf comparison factors: ||g||_2k <= ||g||_inf <= upper * ||g||_2k.
struct BarvinokBracket {
  double lower_factor = 1.0;
  double upper_factor = 1.0; // C(kd+n-1, kd)^(1/2k)
};

BarvinokBracket barvinok_bracket(int n, int d, int k);

} // namespace aprank

#endif
