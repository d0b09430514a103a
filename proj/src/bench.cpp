// SPDX-License-Identifier: Apache-2.0
#include "aprank/bench.hpp"

#include <chrono>
#include <cmath>

#include "aprank/binomial.hpp"
#include "aprank/frank_wolfe.hpp"
#include "aprank/norms.hpp"
#include "aprank/rng.hpp"
#include "aprank/sparsify.hpp"

namespace aprank {

namespace {

// Fresh-seed certificate of the residual norm, independent of the estimates
// the solver used internally.
EstimateResult certify_error(const SymmetricTensor& residual, const NormOrder& order,
                             const BenchOptions& opts, std::uint64_t seed) {
  if (order.inf) {
    auto pts = sample_sphere(residual.vars(), opts.search.sample_size, seed);
    return {linf_lower(residual, pts), 0.0, opts.search.sample_size,
            EstimateMethod::monte_carlo};
  }
  const int ri = static_cast<int>(order.r);
  if (static_cast<double>(ri) == order.r && ri % 2 == 0) {
    try {
      return {lr_exact_even(residual, ri, opts.budget), 0.0, 0, EstimateMethod::exact};
    } catch (const BudgetExceeded&) {
    }
  }
  return lr_monte_carlo(residual, order.r, opts.search.sample_size, seed);
}

} // namespace

std::vector<BenchRow> bench_suite(std::span<const InstanceSpec> specs,
                                  const BenchOptions& opts) {
  std::vector<BenchRow> rows;
  rows.reserve(specs.size());
  for (const auto& spec : specs) {
    BenchRow row;
    row.spec = spec;
    std::uint64_t dim = basis_dim(spec.n, spec.two_d);
    row.ambient_dim = dim == kBinomSaturated ? -1 : static_cast<std::int64_t>(dim);
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto [f, planted] = generate_instance(spec);
      Decomposition result(spec.n, spec.two_d);
      if (opts.method == "energy") {
        SearchConfig cfg = opts.search;
        cfg.seed = derive_seed(spec.seed, 0xB100);
        auto [D, st] = decompose_energy(f, opts.order, opts.epsilon, cfg, opts.budget);
        result = std::move(D);
      } else if (opts.method == "fw") {
        FWConfig fw;
        fw.epsilon = opts.epsilon;
        fw.seed = derive_seed(spec.seed, 0xB200);
        // noise nuclear bound: (||x||^2)^(d/2) is the q_v mixture scaled by
        // 1 / E<x,e1>^d, so its nuclear norm is at most that reciprocal
        std::vector<std::int32_t> axis(spec.n, 0);
        axis[0] = spec.two_d;
        double mixture = sphere_moment(spec.n, axis);
        fw.nuclear_guess = nuclear_upper(planted) + 0.5 * spec.epsilon / mixture;
        auto [D, trace] = fw_decompose(f, fw);
        result = std::move(D);
      } else {
        throw InvalidArgument("unknown bench method '" + opts.method + "'");
      }
      row.rank = result.size();
      SymmetricTensor residual = subtract(f, materialize(result));
      if (opts.method == "fw") {
        row.error = hs_norm(residual); // the FW contract is in HS
      } else {
        EstimateResult err =
            certify_error(residual, opts.order, opts, derive_seed(spec.seed, 0xB300));
        row.error = err.value;
        row.error_std_error = err.std_error;
      }
    } catch (const Error& e) {
      row.failed = true;
      row.message = e.what();
    } catch (const std::logic_error& e) {
      row.failed = true;
      row.message = e.what();
    }
    row.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace aprank
