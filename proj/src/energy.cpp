// SPDX-License-Identifier: Apache-2.0
#include "aprank/energy.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "aprank/rng.hpp"

namespace aprank {

NormOrder NormOrder::lr(double r) {
  if (r < 2.0) throw InvalidArgument("L_r norms are defined here for r >= 2");
  return NormOrder{r, false};
}

NormOrder NormOrder::parse(const std::string& s) {
  if (s == "inf") return sup();
  try {
    std::size_t pos = 0;
    double r = std::stod(s, &pos);
    if (pos == s.size()) return lr(r);
  } catch (const std::exception&) {
  }
  throw InvalidArgument("cannot parse norm order '" + s + "' (expected a number >= 2 or 'inf')");
}

std::string NormOrder::to_string() const {
  if (inf) return "inf";
  if (r == static_cast<double>(static_cast<long long>(r)))
    return std::to_string(static_cast<long long>(r));
  return std::to_string(r);
}

ProjectionResult project_hs(const SymmetricTensor& f,
                            std::span<const UnitVector> vectors,
                            double cond_threshold) {
  const int m = static_cast<int>(vectors.size());
  if (m == 0) throw InvalidArgument("projection needs at least one vector");
  const int d = f.degree();

  Eigen::MatrixXd G(m, m);
  Eigen::VectorXd b(m);
  for (int i = 0; i < m; ++i) {
    if (vectors[i].n() != f.vars())
      throw ShapeMismatch("projection vector length does not match n");
    b(i) = f.eval(vectors[i]);
    for (int j = 0; j <= i; ++j) {
      double g = std::pow(dot(vectors[i], vectors[j]), d);
      G(i, j) = g;
      G(j, i) = g;
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
  const auto& evals = es.eigenvalues();
  double lo = evals(0), hi = evals(m - 1);
  if (lo <= 0.0 || hi / lo > cond_threshold) {
    // name the vector dominating the near-null direction
    int worst = 0;
    double wv = 0.0;
    for (int i = 0; i < m; ++i) {
      double a = std::fabs(es.eigenvectors()(i, 0));
      if (a > wv) { wv = a; worst = i; }
    }
    throw RankDeficiency("Gram matrix is rank-deficient (condition > " +
                             std::to_string(cond_threshold) + "); vector " +
                             std::to_string(worst) + " is nearly dependent",
                         worst);
  }

  Eigen::VectorXd lambda =
      es.eigenvectors() *
      (es.eigenvectors().transpose() * b).cwiseQuotient(evals).eval();

  ProjectionResult out{std::vector<double>(lambda.data(), lambda.data() + m),
                       SymmetricTensor(f.vars(), d)};
  for (int i = 0; i < m; ++i)
    out.projection.add_scaled(out.coeffs[i], rank_one(vectors[i], d));
  return out;
}

namespace {

EstimateResult residual_estimate(const SymmetricTensor& g, const NormOrder& order,
                                 const SearchConfig& cfg, const ExpansionBudget& budget,
                                 int loop) {
  if (order.inf) {
    try {
      CoveringResult cov = covering_oracle(g, 0.1);
      return {cov.upper, cov.upper - cov.lower, 0, EstimateMethod::covering};
    } catch (const BudgetExceeded&) {
      auto pts = sample_sphere(g.vars(), cfg.sample_size,
                               derive_seed(cfg.seed, 0x1F00 + loop));
      return {linf_lower(g, pts), 0.0, cfg.sample_size, EstimateMethod::monte_carlo};
    }
  }
  const int ri = static_cast<int>(order.r);
  if (static_cast<double>(ri) == order.r && ri % 2 == 0) {
    try {
      return {lr_exact_even(g, ri, budget), 0.0, 0, EstimateMethod::exact};
    } catch (const BudgetExceeded&) {
    }
  }
  return lr_monte_carlo(g, order.r, cfg.sample_size, derive_seed(cfg.seed, 0x2F00 + loop));
}

double max_abs_cos(const UnitVector& v, std::span<const UnitVector> existing) {
  double m = 0.0;
  for (const auto& u : existing) m = std::max(m, std::fabs(dot(v, u)));
  return m;
}

} // namespace

std::pair<Decomposition, GreedyState>
decompose_energy(const SymmetricTensor& f, NormOrder order, double epsilon,
                 const SearchConfig& cfg, const ExpansionBudget& budget) {
  if (epsilon <= 0.0) throw InvalidArgument("epsilon must be > 0");
  if (!order.inf && order.r < 2.0) throw InvalidArgument("norm order must be >= 2 or inf");

  const int n = f.vars();
  const int d = f.degree();
  const double fh = hs_norm(f);
  const std::int64_t loop_cap =
      fh == 0.0 ? 0 : static_cast<std::int64_t>(std::ceil(fh * fh / (epsilon * epsilon)));

  GreedyState st;
  SymmetricTensor projection(n, d);
  SymmetricTensor residual = f;
  std::uint64_t stream = 0;
  bool filter_on = cfg.angle_cos_threshold.has_value();
  int consecutive_rejects = 0;

  auto partial = [&]() {
    Decomposition D(n, d);
    for (std::size_t i = 0; i < st.vectors.size(); ++i) D.add(st.coeffs[i], st.vectors[i]);
    return D;
  };

  for (;;) {
    EstimateResult e = residual_estimate(residual, order, cfg, budget, st.loops);
    st.residual_history.push_back(e.value);
    st.residual_r_norm = e.value;
    if (e.value < epsilon) break;
    if (st.loops >= loop_cap)
      throw std::logic_error("energy increment exceeded the ||f||_HS^2/eps^2 loop bound");

    Witness w{UnitVector::from_direction(std::vector<double>(n, 1.0)), 0.0, 0};
    int attempts = 0;
    for (;;) {
      if (++attempts > 25)
        throw DecomposeFailure("witness rejected too many times in one loop", partial(), st);
      try {
        w = search_halfnorm(residual, order.inf ? std::numeric_limits<double>::infinity()
                                                : order.r,
                            e.value, cfg, stream);
      } catch (const SearchFailure& sf) {
        throw DecomposeFailure(std::string("witness search failed: ") + sf.what(),
                               partial(), st);
      }
      stream += w.batches;
      if (filter_on && !st.vectors.empty() &&
          max_abs_cos(w.v, st.vectors) >= *cfg.angle_cos_threshold) {
        if (++consecutive_rejects >= 5) {
          filter_on = false;
          st.angle_filter_disabled = true;
        }
        continue;
      }
      st.vectors.push_back(w.v);
      try {
        ProjectionResult pr = project_hs(f, st.vectors);
        st.coeffs = std::move(pr.coeffs);
        projection = std::move(pr.projection);
      } catch (const RankDeficiency&) {
        st.vectors.pop_back();
        if (++consecutive_rejects >= 5) {
          filter_on = false;
          st.angle_filter_disabled = true;
        }
        continue;
      }
      consecutive_rejects = 0;
      break;
    }

    st.witness_values.push_back(w.value);
    residual = subtract(f, projection);
    st.captured_energy.push_back(hs_inner(projection, projection));
    ++st.loops;
  }

  const int m = static_cast<int>(st.vectors.size());
  st.gram.assign(static_cast<std::size_t>(m) * m, 0.0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      st.gram[static_cast<std::size_t>(i) * m + j] = std::pow(dot(st.vectors[i], st.vectors[j]), d);

  return {partial(), std::move(st)};
}

} // namespace aprank
