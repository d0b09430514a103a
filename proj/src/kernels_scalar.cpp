// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <vector>

#include "kernels_internal.hpp"

// Reference kernels. Compiled with contraction off so the multiply/add
// sequence matches the SIMD variants exactly.

namespace aprank::kernels::scalar_impl {

namespace {

// |x|^p by LSB-first square-and-multiply; the AVX2 variant runs the same
// multiply sequence per lane.
inline double abs_pow_int(double x, int p) {
  double b = std::fabs(x);
  double r = 1.0;
  int e = p;
  for (;;) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e == 0) break;
    b = b * b;
  }
  return r;
}

} // namespace

void eval_block(const EvalPlan& plan, const double* x, double* out, double* scratch) {
  const int n = plan.n;
  const int height = plan.degree + 1;
  double* pw = scratch; // pw[(i*height + e)*kLanes + lane]
  for (int i = 0; i < n; ++i) {
    double* row0 = pw + static_cast<std::size_t>(i) * height * kLanes;
    for (int l = 0; l < kLanes; ++l) row0[l] = 1.0;
    if (height > 1) {
      const double* xi = x + static_cast<std::size_t>(i) * kLanes;
      double* row1 = row0 + kLanes;
      for (int l = 0; l < kLanes; ++l) row1[l] = xi[l];
      for (int e = 2; e < height; ++e) {
        double* re = row0 + static_cast<std::size_t>(e) * kLanes;
        const double* rp = re - kLanes;
        for (int l = 0; l < kLanes; ++l) re[l] = rp[l] * xi[l];
      }
    }
  }
  double acc[kLanes] = {0.0, 0.0, 0.0, 0.0};
  for (std::int64_t t = 0; t < plan.terms; ++t) {
    double tv[kLanes];
    const double c = plan.coeff[t];
    for (int l = 0; l < kLanes; ++l) tv[l] = c;
    for (std::uint32_t o = plan.first[t]; o < plan.first[t + 1]; ++o) {
      const double* row = pw + (static_cast<std::size_t>(plan.op_var[o]) * height +
                                plan.op_exp[o]) * kLanes;
      for (int l = 0; l < kLanes; ++l) tv[l] = tv[l] * row[l];
    }
    for (int l = 0; l < kLanes; ++l) acc[l] = acc[l] + tv[l];
  }
  for (int l = 0; l < kLanes; ++l) out[l] = acc[l];
}

void eval_batch(const EvalPlan& plan, const double* pts, std::int64_t npts, double* out) {
  std::vector<double> scratch(plan.scratch_size());
  const std::int64_t blocks = (npts + kLanes - 1) / kLanes;
  for (std::int64_t b = 0; b < blocks; ++b) {
    scalar_impl::eval_block(plan, pts + b * kLanes * plan.n, out + b * kLanes,
                            scratch.data());
  }
}

void sum_abs_pow(const double* v, std::int64_t count, int p, double& sum_p, double& sum_2p) {
  double ap[kLanes] = {0, 0, 0, 0};
  double a2[kLanes] = {0, 0, 0, 0};
  const std::int64_t full = count - (count % kLanes);
  for (std::int64_t j = 0; j < full; j += kLanes) {
    for (int l = 0; l < kLanes; ++l) {
      double y = abs_pow_int(v[j + l], p);
      ap[l] = ap[l] + y;
      a2[l] = a2[l] + y * y;
    }
  }
  for (std::int64_t j = full; j < count; ++j) {
    double y = abs_pow_int(v[j], p);
    ap[j % kLanes] = ap[j % kLanes] + y;
    a2[j % kLanes] = a2[j % kLanes] + y * y;
  }
  sum_p = (ap[0] + ap[2]) + (ap[1] + ap[3]);
  sum_2p = (a2[0] + a2[2]) + (a2[1] + a2[3]);
}

double max_abs(const double* v, std::int64_t count) {
  double m[kLanes] = {0, 0, 0, 0};
  const std::int64_t full = count - (count % kLanes);
  for (std::int64_t j = 0; j < full; j += kLanes) {
    for (int l = 0; l < kLanes; ++l) m[l] = std::max(m[l], std::fabs(v[j + l]));
  }
  for (std::int64_t j = full; j < count; ++j) {
    m[j % kLanes] = std::max(m[j % kLanes], std::fabs(v[j]));
  }
  return std::max(std::max(m[0], m[2]), std::max(m[1], m[3]));
}

} // namespace aprank::kernels::scalar_impl
