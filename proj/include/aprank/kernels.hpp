// SPDX-License-Identifier: Apache-2.0
#ifndef APRANK_KERNELS_HPP
#define APRANK_KERNELS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "aprank/tensor.hpp"

// Data-parallel inner loops: polynomial evaluation over point batches and the
// reductions the norm estimators and witness searches run on top of it.
// Every kernel has a scalar reference implementation and (on x86-64) an AVX2
// variant selected at runtime; variants are bit-identical by construction —
// each point's value is produced by the same operation sequence, and
// reductions use a fixed four-accumulator scheme with a fixed combine order.

namespace aprank::kernels {

inline constexpr std::int64_t kLanes = 4; // points per block

/// Compiled form of a tensor for repeated evaluation. Zero coefficients are
/// dropped; each surviving monomial is a coefficient plus a list of
/// (variable, exponent) ops against a per-point power table.
struct EvalPlan {
  int n = 0;
  int degree = 0; // max exponent appearing anywhere (power table height)
  std::int64_t terms = 0;
  std::vector<double> coeff;
  std::vector<std::uint32_t> first; // terms+1 offsets into op arrays
  std::vector<std::uint16_t> op_var;
  std::vector<std::uint16_t> op_exp; // >= 1

  static EvalPlan from(const SymmetricTensor& f);

  std::size_t scratch_size() const {
    return static_cast<std::size_t>(n) * (degree + 1) * kLanes;
  }
};

enum class Isa { scalar, avx2 };

bool supports(Isa isa);
Isa active_isa();
// Throws InvalidArgument when the requested ISA is unsupported here.
void force_isa(Isa isa);
// Re-runs default selection (CPU probe + APRANK_SIMD env override).
void reset_isa();
std::string isa_name(Isa isa);

// One block of kLanes points, block-interleaved: x[i*kLanes + lane] is
// coordinate i of point `lane`. scratch must hold plan.scratch_size() doubles.
void eval_block(const EvalPlan& plan, const double* x, double* out, double* scratch);

// npts points in block-interleaved layout padded to a multiple of kLanes;
// writes out[0..npts).
void eval_batch(const EvalPlan& plan, const double* pts, std::int64_t npts, double* out);

// sum_p = sum |v_j|^p, sum_2p = sum |v_j|^(2p), integer p >= 1.
void sum_abs_pow(const double* v, std::int64_t count, int p, double& sum_p, double& sum_2p);

double max_abs(const double* v, std::int64_t count);

/// Point batch in the kernels' block-interleaved layout.
struct PointBlockBuffer {
  int n = 0;
  std::int64_t count = 0;
  std::vector<double> xs; // padded to a multiple of kLanes points

  void resize(int n_, std::int64_t count_);
  void set_point(std::int64_t j, const double* coords);
  void get_point(std::int64_t j, double* coords) const;
  const double* block(std::int64_t b) const { return xs.data() + b * kLanes * n; }
};

} // namespace aprank::kernels

#endif
