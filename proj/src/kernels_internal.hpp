// SPDX-License-Identifier: Apache-2.0
#ifndef APRANK_KERNELS_INTERNAL_HPP
#define APRANK_KERNELS_INTERNAL_HPP

#include "aprank/kernels.hpp"

// Variant entry points. Both ISAs implement the same operation sequence:
// per-point work is lane-independent, reductions keep four accumulators
// (value j lands in accumulator j mod 4) and combine as (a0+a2)+(a1+a3),
// so outputs are bit-identical across variants.

namespace aprank::kernels {

struct KernelTable {
  void (*eval_block)(const EvalPlan&, const double*, double*, double*);
  void (*eval_batch)(const EvalPlan&, const double*, std::int64_t, double*);
  void (*sum_abs_pow)(const double*, std::int64_t, int, double&, double&);
  double (*max_abs)(const double*, std::int64_t);
};

namespace scalar_impl {
void eval_block(const EvalPlan&, const double* x, double* out, double* scratch);
void eval_batch(const EvalPlan&, const double* pts, std::int64_t npts, double* out);
void sum_abs_pow(const double* v, std::int64_t count, int p, double& sum_p, double& sum_2p);
double max_abs(const double* v, std::int64_t count);
} // namespace scalar_impl

#ifdef APRANK_HAVE_AVX2
namespace avx2_impl {
void eval_block(const EvalPlan&, const double* x, double* out, double* scratch);
void eval_batch(const EvalPlan&, const double* pts, std::int64_t npts, double* out);
void sum_abs_pow(const double* v, std::int64_t count, int p, double& sum_p, double& sum_2p);
double max_abs(const double* v, std::int64_t count);
} // namespace avx2_impl
#endif

} // namespace aprank::kernels

#endif
