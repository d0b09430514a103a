// SPDX-License-Identifier: Apache-2.0
#ifndef APRANK_ENERGY_HPP
#define APRANK_ENERGY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "aprank/norms.hpp"
#include "aprank/sphere_search.hpp"
#include "aprank/tensor.hpp"

namespace aprank {

/// Order of the residual norm driving the greedy loop: a finite r in [2, inf)
/// or the sup-norm surrogate.
struct NormOrder {
  double r = 2.0;
  bool inf = false;

  static NormOrder lr(double r);
  static NormOrder sup() { return NormOrder{0.0, true}; }
  // Parses "2", "4.5", "inf"; throws InvalidArgument otherwise.
  static NormOrder parse(const std::string& s);
  std::string to_string() const;
};

struct GreedyState {
  std::vector<UnitVector> vectors;
  std::vector<double> gram; // row-major m x m, entries <v_i, v_j>^d
  std::vector<double> coeffs;
  double residual_r_norm = 0.0;
  int loops = 0;
  std::vector<double> residual_history;  // estimate per loop, including entry
  std::vector<double> witness_values;    // |residual(v)| at selection time
  std::vector<double> captured_energy;   // ||Pi_W f||_HS^2 after each loop
  bool angle_filter_disabled = false;
};

class RankDeficiency : public Error {
public:
  RankDeficiency(std::string msg, int offending_index)
      : Error(std::move(msg)), offending_index(offending_index) {}
  int offending_index;
};

struct ProjectionResult {
  std::vector<double> coeffs;
  SymmetricTensor projection;
};

// HS-orthogonal projection of f onto span{q_{v_i}}: solves the Gram system
// G lambda = b with G_ij = <v_i, v_j>^d and b_i = f(v_i). Throws
// RankDeficiency when cond(G) exceeds the threshold.
ProjectionResult project_hs(const SymmetricTensor& f,
                            std::span<const UnitVector> vectors,
                            double cond_threshold = 1e12);

class DecomposeFailure : public Error {
public:
  DecomposeFailure(std::string msg, Decomposition partial, GreedyState state)
      : Error(std::move(msg)), partial(std::move(partial)), state(std::move(state)) {}
  Decomposition partial;
  GreedyState state;
};

// Greedy residual reduction: estimate the residual L_r norm, find a half-norm
// witness, extend the span, re-project; halts when the estimate drops below
// epsilon. The loop count never exceeds ceil(||f||_HS^2 / epsilon^2).
std::pair<Decomposition, GreedyState>
decompose_energy(const SymmetricTensor& f, NormOrder order, double epsilon,
                 const SearchConfig& cfg, const ExpansionBudget& budget = {});

} // namespace aprank

#endif
