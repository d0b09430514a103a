// SPDX-License-Identifier: Apache-2.0
#ifndef APRANK_FRANK_WOLFE_HPP
#define APRANK_FRANK_WOLFE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "aprank/tensor.hpp"

namespace aprank {

struct FWConfig {
  double epsilon = 0.1;       // target on ||materialize(D) - q||_HS
  double nuclear_guess = 1.0; // c_hat >= ||q||_*; q/c_hat must lie in V_{n,d}
  enum class Lmo { sampling, covering } lmo = Lmo::sampling;
  std::int64_t max_iters = 0; // 0 -> ceil(16 / eps'^2), eps' = epsilon/c_hat
  std::uint64_t seed = 0;
  double eta = 0.05;          // covering resolution
  double covering_budget = 1e8;
  std::int64_t samples = 100'000; // sampling LMO batch
  int ascent_iters = 60;
};

struct FWTraceRow {
  std::int64_t k = 0;
  double delta = 0.0; // F(p_k) on the normalized problem
  double gamma = 0.0;
  double sign = 0.0;  // extreme-point sign, +-1 (0 on a degenerate step)
  std::vector<double> vector;
};

struct FWTrace {
  std::vector<FWTraceRow> rows;
};

struct LmoResult {
  RankOneTerm h;      // +-q_v with <h, g>_HS = -|g(v)|
  double value = 0.0; // |g(v)| reached by the search
  bool degenerate = false; // zero gradient: arbitrary extreme point
};

// Linear minimization over the Veronese body for gradient g: maximizes |g(v)|
// by covering grid or sampling + local ascent; `stream` decorrelates repeated
// sampling calls.
LmoResult lmo(const SymmetricTensor& g, const FWConfig& cfg, std::uint64_t stream = 0);

class FWStall : public Error {
public:
  FWStall(std::string msg, Decomposition partial, FWTrace trace)
      : Error(std::move(msg)), partial(std::move(partial)), trace(std::move(trace)) {}
  Decomposition partial;
  FWTrace trace;
};

// Conditional gradient on F(p) = ||p - q/c_hat||_HS^2 / 2 over V_{n,d} with
// step size 2/(k+2); halts when ||p_k - q/c_hat||_HS < epsilon/c_hat and
// returns the decomposition rescaled by c_hat. Terms sharing a vector merge.
std::pair<Decomposition, FWTrace> fw_decompose(const SymmetricTensor& q,
                                               const FWConfig& cfg);

} // namespace aprank

#endif
