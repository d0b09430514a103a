// SPDX-License-Identifier: Apache-2.0
#ifdef APRANK_HAVE_AVX2

#include <cmath>
#include <immintrin.h>
#include <vector>

#include "kernels_internal.hpp"

// AVX2 variants: one block of four points per vector register. No FMA — the
// scalar reference uses separate multiply/add, and equivalence is bit-exact.

namespace aprank::kernels::avx2_impl {

namespace {

const __m256d kAbsMask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFll));

inline __m256d abs_pow_int(__m256d x, int p) {
  __m256d b = _mm256_and_pd(x, kAbsMask);
  __m256d r = _mm256_set1_pd(1.0);
  int e = p;
  for (;;) {
    if (e & 1) r = _mm256_mul_pd(r, b);
    e >>= 1;
    if (e == 0) break;
    b = _mm256_mul_pd(b, b);
  }
  return r;
}

// (a0+a2) + (a1+a3): matches the scalar combine order.
inline double hsum(__m256d a) {
  __m128d lo = _mm256_castpd256_pd128(a);        // (a0, a1)
  __m128d hi = _mm256_extractf128_pd(a, 1);      // (a2, a3)
  __m128d s = _mm_add_pd(lo, hi);                // (a0+a2, a1+a3)
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline double hmax(__m256d a) {
  __m128d lo = _mm256_castpd256_pd128(a);
  __m128d hi = _mm256_extractf128_pd(a, 1);
  __m128d m = _mm_max_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_max_sd(m, _mm_unpackhi_pd(m, m)));
}

} // namespace

void eval_block(const EvalPlan& plan, const double* x, double* out, double* scratch) {
  const int n = plan.n;
  const int height = plan.degree + 1;
  double* pw = scratch;
  const __m256d one = _mm256_set1_pd(1.0);
  for (int i = 0; i < n; ++i) {
    double* row0 = pw + static_cast<std::size_t>(i) * height * kLanes;
    _mm256_storeu_pd(row0, one);
    if (height > 1) {
      __m256d xi = _mm256_loadu_pd(x + static_cast<std::size_t>(i) * kLanes);
      _mm256_storeu_pd(row0 + kLanes, xi);
      __m256d prev = xi;
      for (int e = 2; e < height; ++e) {
        prev = _mm256_mul_pd(prev, xi);
        _mm256_storeu_pd(row0 + static_cast<std::size_t>(e) * kLanes, prev);
      }
    }
  }
  __m256d acc = _mm256_setzero_pd();
  for (std::int64_t t = 0; t < plan.terms; ++t) {
    __m256d tv = _mm256_set1_pd(plan.coeff[t]);
    for (std::uint32_t o = plan.first[t]; o < plan.first[t + 1]; ++o) {
      const double* row = pw + (static_cast<std::size_t>(plan.op_var[o]) * height +
                                plan.op_exp[o]) * kLanes;
      tv = _mm256_mul_pd(tv, _mm256_loadu_pd(row));
    }
    acc = _mm256_add_pd(acc, tv);
  }
  _mm256_storeu_pd(out, acc);
}

void eval_batch(const EvalPlan& plan, const double* pts, std::int64_t npts, double* out) {
  std::vector<double> scratch(plan.scratch_size());
  const std::int64_t blocks = (npts + kLanes - 1) / kLanes;
  for (std::int64_t b = 0; b < blocks; ++b) {
    avx2_impl::eval_block(plan, pts + b * kLanes * plan.n, out + b * kLanes,
                          scratch.data());
  }
}

void sum_abs_pow(const double* v, std::int64_t count, int p, double& sum_p, double& sum_2p) {
  __m256d ap = _mm256_setzero_pd();
  __m256d a2 = _mm256_setzero_pd();
  const std::int64_t full = count - (count % kLanes);
  for (std::int64_t j = 0; j < full; j += kLanes) {
    __m256d y = abs_pow_int(_mm256_loadu_pd(v + j), p);
    ap = _mm256_add_pd(ap, y);
    a2 = _mm256_add_pd(a2, _mm256_mul_pd(y, y));
  }
  alignas(32) double lp[kLanes];
  alignas(32) double l2[kLanes];
  _mm256_store_pd(lp, ap);
  _mm256_store_pd(l2, a2);
  for (std::int64_t j = full; j < count; ++j) {
    double b = std::fabs(v[j]);
    double r = 1.0;
    int e = p;
    for (;;) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e == 0) break;
      b = b * b;
    }
    lp[j % kLanes] = lp[j % kLanes] + r;
    l2[j % kLanes] = l2[j % kLanes] + r * r;
  }
  sum_p = (lp[0] + lp[2]) + (lp[1] + lp[3]);
  sum_2p = (l2[0] + l2[2]) + (l2[1] + l2[3]);
}

double max_abs(const double* v, std::int64_t count) {
  __m256d m = _mm256_setzero_pd();
  const std::int64_t full = count - (count % kLanes);
  for (std::int64_t j = 0; j < full; j += kLanes) {
    m = _mm256_max_pd(m, _mm256_and_pd(_mm256_loadu_pd(v + j), kAbsMask));
  }
  double best = hmax(m);
  for (std::int64_t j = full; j < count; ++j) best = std::max(best, std::fabs(v[j]));
  return best;
}

} // namespace aprank::kernels::avx2_impl

#endif // APRANK_HAVE_AVX2
