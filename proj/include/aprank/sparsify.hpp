// SPDX-License-Identifier: Apache-2.0
#ifndef APRANK_SPARSIFY_HPP
#define APRANK_SPARSIFY_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "aprank/norms.hpp"
#include "aprank/tensor.hpp"

namespace aprank {

/// Norm the sparsifier certifies against: exact HS, an L_r estimate, or the
/// sup-norm surrogate (covering bracket at small n, Barvinok-factored L_2k
/// upper bound otherwise).
struct NormSpec {
  enum class Kind { hs, lr, linf_surrogate };
  Kind kind = Kind::hs;
  double r = 2.0; // meaningful for Kind::lr only

  static NormSpec hs() { return {Kind::hs, 2.0}; }
  static NormSpec lr(double r);
  static NormSpec linf() { return {Kind::linf_surrogate, 0.0}; }
  // "hs" | "l<r>" | "linf"
  static NormSpec parse(const std::string& s);
  std::string to_string() const;
};

struct SparsifyConfig {
  NormSpec norm = NormSpec::hs();
  double epsilon = 0.1;
  std::uint64_t seed = 0;
  int max_retries = 16;
  std::optional<double> type2_override;
  double type2_c = 1.0; // hidden constant in the L_r type-2 estimate
  ExpansionBudget budget{};
  std::int64_t mc_samples = 100'000;
  double covering_eta = 0.05;
  double covering_budget = 1e8;
};

// Sum of |c_i|: an upper bound for the nuclear norm of the materialization.
double nuclear_upper(const Decomposition& D);

// Type-2 constant used in the Maurey sample count: 1 for HS,
// type2_c * sqrt(min{r, n log(ed)}) for L_r, sqrt(2) d for the sup surrogate.
double type2_bound(const NormSpec& norm, int n, int d, double type2_c = 1.0);

struct SparsifyResult {
  Decomposition sparse;
  int retries_used = 0;     // draws performed, including the accepted one
  std::int64_t k = 0;       // Maurey sample count
  double measured_error = 0.0;
  double error_std_error = 0.0;
};

class SparsifyFailure : public Error {
public:
  SparsifyFailure(std::string msg, Decomposition best, double best_error, int retries)
      : Error(std::move(msg)), best(std::move(best)), best_error(best_error),
        retries(retries) {}
  Decomposition best;
  double best_error;
  int retries;
};

// Maurey empirical sparsification: draws k = ceil(4 T^2 (sum|c_i|)^2 / eps^2)
// indices from the |c|-weighted measure, emits the sign-averaged candidate
// rescaled by sum|c_i|, redraws until the norm check accepts. Repeated
// indices merge into one term.
SparsifyResult maurey_sparsify(const Decomposition& D, const SparsifyConfig& cfg);

} // namespace aprank

#endif
