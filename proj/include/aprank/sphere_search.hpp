// SPDX-License-Identifier: Apache-2.0
#ifndef APRANK_SPHERE_SEARCH_HPP
#define APRANK_SPHERE_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "aprank/common.hpp"
#include "aprank/tensor.hpp"

namespace aprank {

struct SearchConfig {
  std::int64_t sample_size = 100'000;
  int max_retries = 20;
  std::uint64_t seed = 0;
  double c1 = 3.0; // unnamed absolute constant in the sample-size bound
  std::optional<double> angle_cos_threshold = 0.8; // nullopt disables the filter
};

std::vector<UnitVector> sample_sphere(int n, std::int64_t count, std::uint64_t seed);

// min{ (c1 r)^(d/2), C(rd+n-1, rd)^(1/2r) }.
double alpha_bound(int n, int d, double r, double c1);

struct SampleSizeBound {
  std::int64_t count = 0;
  bool saturated = false; // true when ceil(t * alpha^(2r)) exceeded the cap
};

SampleSizeBound sample_size_bound(int n, int d, double r, double t, double c1,
                                  std::int64_t cap = (std::int64_t{1} << 62));

struct Witness {
  UnitVector v;
  double value = 0.0; // |g(v)|
  int batches = 0;    // sample batches consumed
};

class SearchFailure : public Error {
public:
  SearchFailure(std::string msg, UnitVector best, double best_value, int batches)
      : Error(std::move(msg)), best(std::move(best)), best_value(best_value),
        batches(batches) {}
  UnitVector best;
  double best_value;
  int batches;
};

// Samples batches of cfg.sample_size uniform points until some point has
// |g(v)| >= norm_value / 2, retrying up to cfg.max_retries batches; returns
// the maximizer over the successful batch. `stream` offsets the sample
// counter so repeated calls draw fresh points deterministically.
Witness search_halfnorm(const SymmetricTensor& g, double r, double norm_value,
                        const SearchConfig& cfg, std::uint64_t stream = 0);

// Maximizer of |g| over one deterministic batch of uniform samples,
// counter range [counter_base, counter_base + samples).
Witness best_sample_point(const SymmetricTensor& g, std::int64_t samples,
                          std::uint64_t seed, std::int64_t counter_base = 0);

struct CoveringResult {
  UnitVector v;
  double lower = 0.0; // |g(v)|, certified lower bound for ||g||_inf
  double upper = 0.0; // lower / (1 - eta^2), certified upper bound
};

// Evaluates g on a projected cube-surface grid of pitch eta/(d*sqrt(n)).
// Feasibility guard: (3d/eta)^n and the actual grid size must stay within
// `budget` points.
CoveringResult covering_oracle(const SymmetricTensor& g, double eta,
                               double budget = 1e8);

// Projected-gradient ascent on |g| over the sphere with backtracking; the
// returned point never evaluates below |g(v0)|.
UnitVector local_ascent(const SymmetricTensor& g, const UnitVector& v0, int iters);

} // namespace aprank

#endif
