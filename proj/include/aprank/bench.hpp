// SPDX-License-Identifier: Apache-2.0
#ifndef APRANK_BENCH_HPP
#define APRANK_BENCH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "aprank/energy.hpp"
#include "aprank/instances.hpp"
#include "aprank/sphere_search.hpp"

namespace aprank {

struct BenchOptions {
  std::string method = "energy"; // energy | fw
  NormOrder order = NormOrder{4.0, false};
  double epsilon = 0.3;
  SearchConfig search{};
  ExpansionBudget budget{};
};

struct BenchRow {
  InstanceSpec spec;
  std::int64_t ambient_dim = 0; // C(n + two_d - 1, two_d)
  std::int64_t rank = 0;
  double error = 0.0;          // fresh-seed estimate of the residual norm
  double error_std_error = 0.0;
  double wall_seconds = 0.0;
  bool failed = false;
  std::string message;
};

// Runs one decomposition per spec; per-row failures are recorded and the
// suite continues. Row order follows the spec order.
std::vector<BenchRow> bench_suite(std::span<const InstanceSpec> specs,
                                  const BenchOptions& opts);

} // namespace aprank

#endif
