// SPDX-License-Identifier: Apache-2.0
#include "aprank/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "aprank/common.hpp"
#include "kernels_internal.hpp"

namespace aprank::kernels {

EvalPlan EvalPlan::from(const SymmetricTensor& f) {
  EvalPlan plan;
  plan.n = f.vars();
  const auto& basis = f.basis();
  plan.first.push_back(0);
  for (std::int64_t idx = 0; idx < f.dim(); ++idx) {
    double c = f.coeff(idx);
    if (c == 0.0) continue;
    plan.coeff.push_back(c);
    auto alpha = basis.exponents(idx);
    for (int i = 0; i < plan.n; ++i) {
      if (alpha[i] > 0) {
        plan.op_var.push_back(static_cast<std::uint16_t>(i));
        plan.op_exp.push_back(static_cast<std::uint16_t>(alpha[i]));
        plan.degree = std::max(plan.degree, static_cast<int>(alpha[i]));
      }
    }
    plan.first.push_back(static_cast<std::uint32_t>(plan.op_var.size()));
  }
  plan.terms = static_cast<std::int64_t>(plan.coeff.size());
  return plan;
}

void PointBlockBuffer::resize(int n_, std::int64_t count_) {
  n = n_;
  count = count_;
  std::int64_t padded = (count_ + kLanes - 1) / kLanes * kLanes;
  xs.assign(static_cast<std::size_t>(padded) * n_, 0.0);
}

void PointBlockBuffer::set_point(std::int64_t j, const double* coords) {
  double* base = xs.data() + (j / kLanes) * kLanes * n + (j % kLanes);
  for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i) * kLanes] = coords[i];
}

void PointBlockBuffer::get_point(std::int64_t j, double* coords) const {
  const double* base = xs.data() + (j / kLanes) * kLanes * n + (j % kLanes);
  for (int i = 0; i < n; ++i) coords[i] = base[static_cast<std::size_t>(i) * kLanes];
}

namespace {

constexpr KernelTable kScalarTable = {
    &scalar_impl::eval_block, &scalar_impl::eval_batch,
    &scalar_impl::sum_abs_pow, &scalar_impl::max_abs};

#ifdef APRANK_HAVE_AVX2
constexpr KernelTable kAvx2Table = {
    &avx2_impl::eval_block, &avx2_impl::eval_batch,
    &avx2_impl::sum_abs_pow, &avx2_impl::max_abs};
#endif

struct Dispatch {
  const KernelTable* table;
  Isa isa;

  Dispatch() { select_default(); }

  void select(Isa want) {
    if (want == Isa::scalar) {
      table = &kScalarTable;
      isa = Isa::scalar;
      return;
    }
#ifdef APRANK_HAVE_AVX2
    if (want == Isa::avx2 && __builtin_cpu_supports("avx2")) {
      table = &kAvx2Table;
      isa = Isa::avx2;
      return;
    }
#endif
    throw InvalidArgument("requested SIMD variant is not available on this machine");
  }

  void select_default() {
    table = &kScalarTable;
    isa = Isa::scalar;
#ifdef APRANK_HAVE_AVX2
    if (__builtin_cpu_supports("avx2")) {
      table = &kAvx2Table;
      isa = Isa::avx2;
    }
#endif
    if (const char* env = std::getenv("APRANK_SIMD")) {
      if (std::strcmp(env, "scalar") == 0) select(Isa::scalar);
      else if (std::strcmp(env, "avx2") == 0) select(Isa::avx2);
    }
  }
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

} // namespace

bool supports(Isa isa) {
  if (isa == Isa::scalar) return true;
#ifdef APRANK_HAVE_AVX2
  if (isa == Isa::avx2) return __builtin_cpu_supports("avx2");
#endif
  return false;
}

Isa active_isa() { return dispatch().isa; }

void force_isa(Isa isa) { dispatch().select(isa); }

void reset_isa() { dispatch().select_default(); }

std::string isa_name(Isa isa) { return isa == Isa::scalar ? "scalar" : "avx2"; }

void eval_block(const EvalPlan& plan, const double* x, double* out, double* scratch) {
  dispatch().table->eval_block(plan, x, out, scratch);
}

void eval_batch(const EvalPlan& plan, const double* pts, std::int64_t npts, double* out) {
  dispatch().table->eval_batch(plan, pts, npts, out);
}

void sum_abs_pow(const double* v, std::int64_t count, int p, double& sum_p, double& sum_2p) {
  dispatch().table->sum_abs_pow(v, count, p, sum_p, sum_2p);
}

double max_abs(const double* v, std::int64_t count) {
  return dispatch().table->max_abs(v, count);
}

} // namespace aprank::kernels
