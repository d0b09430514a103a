// SPDX-License-Identifier: Apache-2.0
#include "aprank/sparsify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "aprank/binomial.hpp"
#include "aprank/rng.hpp"
#include "aprank/sphere_search.hpp"

namespace aprank {

NormSpec NormSpec::lr(double r) {
  if (r < 2.0) throw InvalidArgument("L_r norms are defined here for r >= 2");
  return {Kind::lr, r};
}

NormSpec NormSpec::parse(const std::string& s) {
  if (s == "hs") return hs();
  if (s == "linf" || s == "linf-surrogate") return linf();
  if (!s.empty() && s[0] == 'l') {
    try {
      std::size_t pos = 0;
      double r = std::stod(s.substr(1), &pos);
      if (pos == s.size() - 1) return lr(r);
    } catch (const std::exception&) {
    }
  }
  throw InvalidArgument("unknown norm '" + s + "' (expected hs, l<r>, or linf)");
}

std::string NormSpec::to_string() const {
  switch (kind) {
    case Kind::hs: return "hs";
    case Kind::linf_surrogate: return "linf";
    case Kind::lr:
      if (r == static_cast<double>(static_cast<long long>(r)))
        return "l" + std::to_string(static_cast<long long>(r));
      return "l" + std::to_string(r);
  }
  return "?";
}

double nuclear_upper(const Decomposition& D) {
  double s = 0.0;
  for (const auto& t : D.terms()) s += std::fabs(t.coeff);
  return s;
}

double type2_bound(const NormSpec& norm, int n, int d, double type2_c) {
  switch (norm.kind) {
    case NormSpec::Kind::hs:
      return 1.0; // Euclidean
    case NormSpec::Kind::lr: {
      if (d < 1) throw InvalidArgument("type2_bound needs d >= 1 for L_r");
      double cap = n * std::log(std::exp(1.0) * d);
      return type2_c * std::sqrt(std::min(norm.r, cap));
    }
    case NormSpec::Kind::linf_surrogate:
      return std::sqrt(2.0) * d; // 4T^2 = 8d^2
  }
  return 1.0;
}

namespace {

struct ErrorCheck {
  bool accepted = false;
  double measured = 0.0;
  double std_error = 0.0;
};

// Certifies ||diff|| <= eps for the configured norm; Monte Carlo estimates
// accept with a 2-sigma margin.
ErrorCheck check_error(const SymmetricTensor& diff, const SparsifyConfig& cfg,
                       std::uint64_t attempt_seed) {
  ErrorCheck out;
  switch (cfg.norm.kind) {
    case NormSpec::Kind::hs: {
      out.measured = hs_norm(diff);
      out.accepted = out.measured <= cfg.epsilon;
      return out;
    }
    case NormSpec::Kind::lr: {
      const int ri = static_cast<int>(cfg.norm.r);
      if (static_cast<double>(ri) == cfg.norm.r && ri % 2 == 0) {
        try {
          out.measured = lr_exact_even(diff, ri, cfg.budget);
          out.accepted = out.measured <= cfg.epsilon;
          return out;
        } catch (const BudgetExceeded&) {
        }
      }
      EstimateResult est = lr_monte_carlo(diff, cfg.norm.r, cfg.mc_samples, attempt_seed);
      out.measured = est.value;
      out.std_error = est.std_error;
      out.accepted = est.value <= cfg.epsilon - 2.0 * est.std_error;
      return out;
    }
    case NormSpec::Kind::linf_surrogate: {
      try {
        CoveringResult cov = covering_oracle(diff, cfg.covering_eta, cfg.covering_budget);
        out.measured = cov.upper;
        out.std_error = cov.upper - cov.lower;
        out.accepted = cov.upper <= cfg.epsilon;
        return out;
      } catch (const BudgetExceeded&) {
      }
      // Barvinok-factored L_2k upper bound; largest feasible k is tightest
      const int n = diff.vars();
      const int d = diff.degree();
      int k_hi = static_cast<int>(std::ceil(n * std::log(std::exp(1.0) * std::max(1, d))));
      for (int k = std::max(1, k_hi); k >= 1; --k) {
        try {
          double l2k = lr_exact_even(diff, 2 * k, cfg.budget);
          double upper = barvinok_bracket(n, d, k).upper_factor * l2k;
          out.measured = upper;
          out.accepted = upper <= cfg.epsilon;
          return out;
        } catch (const BudgetExceeded&) {
        }
      }
      throw BudgetExceeded("no sup-norm certificate fits the budget (covering and L_2k both too large)");
    }
  }
  return out;
}

} // namespace

SparsifyResult maurey_sparsify(const Decomposition& D, const SparsifyConfig& cfg) {
  if (D.empty()) throw InvalidArgument("sparsify needs a nonempty decomposition");
  if (cfg.epsilon <= 0.0) throw InvalidArgument("epsilon must be > 0");
  const int n = D.vars();
  const int d = D.degree();
  const std::int64_t m = D.size();

  double weight_sum = nuclear_upper(D);
  if (weight_sum == 0.0) {
    // all-zero coefficients: the target is the zero tensor
    return {Decomposition(n, d), 1, 0, 0.0, 0.0};
  }

  const double T = cfg.type2_override.value_or(type2_bound(cfg.norm, n, d, cfg.type2_c));
  const double k_real = std::ceil(4.0 * T * T * weight_sum * weight_sum /
                                  (cfg.epsilon * cfg.epsilon));
  if (!(k_real <= 2e7))
    throw BudgetExceeded("Maurey sample count " + std::to_string(k_real) +
                         " is out of reach; relax epsilon or lower the nuclear bound");
  const std::int64_t k = static_cast<std::int64_t>(k_real);

  // sampling measure mu(i) = |c_i| / sum|c|
  std::vector<double> cdf(m);
  double acc = 0.0;
  for (std::int64_t i = 0; i < m; ++i) {
    acc += std::fabs(D.term(i).coeff);
    cdf[i] = acc / weight_sum;
  }
  cdf[m - 1] = 1.0;

  const SymmetricTensor p = materialize(D);

  Decomposition best(n, d);
  double best_error = std::numeric_limits<double>::infinity();
  double best_se = 0.0;

  std::vector<std::int64_t> counts(m);
  for (int attempt = 1; attempt <= cfg.max_retries; ++attempt) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::int64_t j = 0; j < k; ++j) {
      Rng rng(cfg.seed, streams::maurey,
              static_cast<std::uint64_t>(attempt - 1) * k + j);
      double u = rng.next_unit();
      auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
      counts[it - cdf.begin()] += 1;
    }
    Decomposition candidate(n, d);
    for (std::int64_t i = 0; i < m; ++i) {
      if (counts[i] == 0) continue;
      double sign = D.term(i).coeff >= 0.0 ? 1.0 : -1.0;
      candidate.add(weight_sum / static_cast<double>(k) * counts[i] * sign,
                    D.term(i).vector);
    }
    SymmetricTensor diff = subtract(p, materialize(candidate));
    ErrorCheck check = check_error(diff, cfg, derive_seed(cfg.seed, 0x5A00 + attempt));
    if (check.accepted)
      return {std::move(candidate), attempt, k, check.measured, check.std_error};
    if (check.measured < best_error) {
      best_error = check.measured;
      best_se = check.std_error;
      best = std::move(candidate);
    }
  }
  (void)best_se;
  throw SparsifyFailure("no draw met the " + cfg.norm.to_string() + " tolerance " +
                            std::to_string(cfg.epsilon) + " in " +
                            std::to_string(cfg.max_retries) + " retries (best " +
                            std::to_string(best_error) + ")",
                        std::move(best), best_error, cfg.max_retries);
}

} // namespace aprank
