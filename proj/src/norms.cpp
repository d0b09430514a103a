// SPDX-License-Identifier: Apache-2.0
#include "aprank/norms.hpp"

#include <cmath>

#include "aprank/binomial.hpp"
#include "aprank/kernels.hpp"
#include "aprank/parallel.hpp"
#include "sampling_internal.hpp"

namespace aprank {

std::string method_name(EstimateMethod m) {
  switch (m) {
    case EstimateMethod::exact: return "exact";
    case EstimateMethod::monte_carlo: return "monte-carlo";
    case EstimateMethod::covering: return "covering";
  }
  return "?";
}

double sphere_moment(int n, std::span<const std::int32_t> beta) {
  if (n < 1) throw InvalidArgument("sphere_moment needs n >= 1");
  if (static_cast<int>(beta.size()) != n)
    throw ShapeMismatch("moment multi-index length does not match n");
  std::int64_t total_half = 0;
  double log_num = 0.0;
  for (std::int32_t b : beta) {
    if (b < 0) throw InvalidArgument("moment exponents must be >= 0");
    if (b % 2 != 0) return 0.0;
    std::int64_t g = b / 2;
    total_half += g;
    log_num += log_dfact_odd(g);
  }
  if (total_half == 0) return 1.0;
  double log_den = 0.0;
  for (std::int64_t j = 0; j < total_half; ++j) log_den += std::log(static_cast<double>(n + 2 * j));
  return std::exp(log_num - log_den);
}

double integrate_sphere(const SymmetricTensor& f) {
  double acc = 0.0;
  const auto& basis = f.basis();
  for (std::int64_t idx = 0; idx < f.dim(); ++idx) {
    double c = f.coeff(idx);
    if (c == 0.0) continue;
    double m = sphere_moment(f.vars(), basis.exponents(idx));
    if (m != 0.0) acc += c * m;
  }
  return acc;
}

namespace {

std::int64_t nonzero_count(const SymmetricTensor& f) {
  std::int64_t nz = 0;
  for (double c : f.coeffs())
    if (c != 0.0) ++nz;
  return nz;
}

// Budget audit for the binary-power chain f -> f^k -> (f^k)^2: final basis
// size and total coefficient-pair work.
void check_expansion_budget(const SymmetricTensor& f, int k, const ExpansionBudget& budget) {
  const int n = f.vars();
  const int d = f.degree();
  std::uint64_t final_dim = basis_dim(n, 2 * k * d);
  if (final_dim == kBinomSaturated ||
      final_dim > static_cast<std::uint64_t>(budget.max_monomials))
    throw BudgetExceeded(
        "exact L_" + std::to_string(2 * k) + " expansion needs " +
        (final_dim == kBinomSaturated ? std::string("> 10^19") : std::to_string(final_dim)) +
        " monomials (budget " + std::to_string(budget.max_monomials) +
        "); use lr_monte_carlo");
  double work = 0.0;
  // dims only upper-bound the nonzero counts; good enough for a guard
  double cur_dim = static_cast<double>(nonzero_count(f));
  int cur_deg = d;
  int e = k;
  double acc_dim = 0.0;
  int acc_deg = 0;
  bool have_acc = false;
  while (e > 0) {
    if (e & 1) {
      if (!have_acc) {
        acc_dim = cur_dim;
        acc_deg = cur_deg;
        have_acc = true;
      } else {
        work += acc_dim * cur_dim;
        acc_deg += cur_deg;
        acc_dim = static_cast<double>(basis_dim(n, acc_deg));
      }
    }
    e >>= 1;
    if (e > 0) {
      work += cur_dim * cur_dim;
      cur_deg *= 2;
      cur_dim = static_cast<double>(basis_dim(n, cur_deg));
    }
  }
  work += acc_dim * acc_dim; // final squaring
  if (work > budget.max_pair_work)
    throw BudgetExceeded("exact L_" + std::to_string(2 * k) + " expansion needs ~" +
                         std::to_string(static_cast<long long>(work)) +
                         " coefficient products (budget " +
                         std::to_string(static_cast<long long>(budget.max_pair_work)) +
                         "); use lr_monte_carlo");
}

SymmetricTensor pow_tensor(const SymmetricTensor& f, int k) {
  // binary exponentiation, k >= 1
  SymmetricTensor base = f;
  SymmetricTensor acc(1, 0);
  bool have_acc = false;
  int e = k;
  while (e > 0) {
    if (e & 1) {
      acc = have_acc ? multiply(acc, base) : base;
      have_acc = true;
    }
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return acc;
}

} // namespace

double lr_exact_even(const SymmetricTensor& f, int r, const ExpansionBudget& budget) {
  if (r < 2 || r % 2 != 0)
    throw InvalidArgument("lr_exact_even needs an even integer r >= 2");
  const int k = r / 2;
  check_expansion_budget(f, k, budget);
  SymmetricTensor half = pow_tensor(f, k);
  SymmetricTensor full = multiply(half, half);
  double integral = integrate_sphere(full);
  if (integral <= 0.0) return 0.0;
  return std::pow(integral, 1.0 / r);
}

EstimateResult lr_monte_carlo(const SymmetricTensor& f, double r,
                              std::int64_t samples, std::uint64_t seed) {
  if (r < 2.0) throw InvalidArgument("L_r norms are defined here for r >= 2");
  if (samples < 2) throw InvalidArgument("lr_monte_carlo needs at least 2 samples");

  const int n = f.vars();
  const kernels::EvalPlan plan = kernels::EvalPlan::from(f);
  const int p_int = static_cast<int>(r);
  const bool integer_r = (static_cast<double>(p_int) == r);

  const std::int64_t nchunks = chunk_count(samples);
  std::vector<double> part_sum(nchunks, 0.0), part_sq(nchunks, 0.0);
  parallel_chunks(samples, [&](std::int64_t c, std::int64_t begin, std::int64_t end) {
    kernels::PointBlockBuffer buf;
    std::vector<double> tmp;
    fill_sphere_chunk(seed, streams::lr_monte_carlo, begin, end - begin, n, buf, tmp);
    std::vector<double> vals((end - begin + kernels::kLanes - 1) / kernels::kLanes *
                             kernels::kLanes);
    kernels::eval_batch(plan, buf.xs.data(), end - begin, vals.data());
    double s = 0.0, s2 = 0.0;
    if (integer_r) {
      kernels::sum_abs_pow(vals.data(), end - begin, p_int, s, s2);
    } else {
      double a[4] = {0, 0, 0, 0}, b[4] = {0, 0, 0, 0};
      for (std::int64_t j = 0; j < end - begin; ++j) {
        double y = std::pow(std::fabs(vals[j]), r);
        a[j % 4] += y;
        b[j % 4] += y * y;
      }
      s = (a[0] + a[2]) + (a[1] + a[3]);
      s2 = (b[0] + b[2]) + (b[1] + b[3]);
    }
    part_sum[c] = s;
    part_sq[c] = s2;
  });

  double sum = 0.0, sumsq = 0.0;
  for (std::int64_t c = 0; c < nchunks; ++c) {
    sum += part_sum[c];
    sumsq += part_sq[c];
  }
  const double N = static_cast<double>(samples);
  const double mean = sum / N;
  double var = (sumsq - N * mean * mean) / (N - 1.0);
  if (var < 0.0) var = 0.0;
  const double se_mean = std::sqrt(var / N);

  EstimateResult out;
  out.samples = samples;
  out.method = EstimateMethod::monte_carlo;
  if (mean <= 0.0) {
    out.value = 0.0;
    out.std_error = 0.0;
    return out;
  }
  out.value = std::pow(mean, 1.0 / r);
  // delta method: d/dm m^(1/r) = m^(1/r - 1) / r
  out.std_error = std::pow(mean, 1.0 / r - 1.0) / r * se_mean;
  return out;
}

double linf_lower(const SymmetricTensor& f, std::span<const UnitVector> points) {
  if (points.empty()) throw InvalidArgument("linf_lower needs at least one point");
  double best = 0.0;
  for (const auto& v : points) best = std::max(best, std::fabs(f.eval(v)));
  return best;
}

BarvinokBracket barvinok_bracket(int n, int d, int k) {
  if (k < 1) throw InvalidArgument("barvinok_bracket needs k >= 1");
  if (n < 1) throw InvalidArgument("barvinok_bracket needs n >= 1");
  BarvinokBracket out;
  const double kd = static_cast<double>(k) * d;
  out.upper_factor = std::exp(log_binom(kd + n - 1, kd) / (2.0 * k));
  return out;
}

} // namespace aprank
