// SPDX-License-Identifier: Apache-2.0
#include "aprank/frank_wolfe.hpp"

#include <cmath>
#include <map>

#include "aprank/rng.hpp"
#include "aprank/sphere_search.hpp"

namespace aprank {

LmoResult lmo(const SymmetricTensor& g, const FWConfig& cfg, std::uint64_t stream) {
  const int n = g.vars();
  const int d = g.degree();

  UnitVector v = UnitVector::from_direction(std::vector<double>(n, 1.0));
  double value = 0.0;
  if (cfg.lmo == FWConfig::Lmo::covering) {
    CoveringResult cov = covering_oracle(g, cfg.eta, cfg.covering_budget);
    v = cov.v;
    value = cov.lower;
  } else {
    Witness w = best_sample_point(g, cfg.samples, cfg.seed,
                                  static_cast<std::int64_t>(stream) * cfg.samples);
    v = local_ascent(g, w.v, cfg.ascent_iters);
    value = std::fabs(g.eval(v));
  }

  if (value == 0.0) {
    std::vector<double> e1(n, 0.0);
    e1[0] = 1.0;
    return {RankOneTerm{1.0, UnitVector::from_direction(std::move(e1)), d}, 0.0, true};
  }
  double sign = g.eval(v) > 0.0 ? -1.0 : 1.0; // <sign*q_v, g> = -|g(v)|
  return {RankOneTerm{sign, v, d}, value, false};
}

std::pair<Decomposition, FWTrace> fw_decompose(const SymmetricTensor& q,
                                               const FWConfig& cfg) {
  if (cfg.epsilon <= 0.0) throw InvalidArgument("epsilon must be > 0");
  if (cfg.nuclear_guess <= 0.0) throw InvalidArgument("nuclear_guess must be > 0");
  const int n = q.vars();
  const int d = q.degree();

  SymmetricTensor target = q;
  target.scale(1.0 / cfg.nuclear_guess);
  const double eps_n = cfg.epsilon / cfg.nuclear_guess;

  std::int64_t max_iters = cfg.max_iters;
  if (max_iters <= 0) {
    double raw = std::ceil(16.0 / (eps_n * eps_n));
    if (!(raw <= 1e8))
      throw BudgetExceeded("iteration budget ceil(16/eps'^2) exceeds 1e8; relax epsilon");
    max_iters = static_cast<std::int64_t>(raw);
  }

  SymmetricTensor p(n, d);
  // normalized-term ledger; exact-duplicate vectors merge
  std::map<std::vector<double>, double> weights;
  FWTrace trace;

  auto assemble = [&]() {
    Decomposition D(n, d);
    for (const auto& [vec, w] : weights) {
      if (w != 0.0) D.add(cfg.nuclear_guess * w, UnitVector::from_direction(vec));
    }
    return D;
  };

  for (std::int64_t k = 0;; ++k) {
    SymmetricTensor grad = subtract(p, target);
    double dist = hs_norm(grad);
    if (dist < eps_n) break;
    if (k >= max_iters)
      throw FWStall("no convergence in " + std::to_string(max_iters) +
                        " iterations; check the nuclear guess and the LMO budget",
                    assemble(), std::move(trace));

    LmoResult step = lmo(grad, cfg, static_cast<std::uint64_t>(k));
    const double gamma = 2.0 / static_cast<double>(k + 2);

    FWTraceRow row;
    row.k = k;
    row.delta = 0.5 * dist * dist;
    row.gamma = gamma;
    row.sign = step.degenerate ? 0.0 : step.h.coeff;
    row.vector.assign(step.h.vector.entries().begin(), step.h.vector.entries().end());
    trace.rows.push_back(std::move(row));

    p.scale(1.0 - gamma);
    p.add_scaled(gamma * step.h.coeff, rank_one(step.h.vector, d));
    for (auto& [vec, w] : weights) w *= (1.0 - gamma);
    std::vector<double> key(step.h.vector.entries().begin(), step.h.vector.entries().end());
    weights[std::move(key)] += gamma * step.h.coeff;
  }

  return {assemble(), std::move(trace)};
}

} // namespace aprank
