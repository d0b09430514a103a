// SPDX-License-Identifier: Apache-2.0
#include "aprank/sphere_search.hpp"

#include <cmath>

#include "aprank/binomial.hpp"
#include "aprank/kernels.hpp"
#include "aprank/parallel.hpp"
#include "sampling_internal.hpp"

namespace aprank {

std::vector<UnitVector> sample_sphere(int n, std::int64_t count, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("sample_sphere needs n >= 1");
  std::vector<UnitVector> out;
  out.reserve(count);
  std::vector<double> tmp(n);
  for (std::int64_t i = 0; i < count; ++i) {
    sphere_vector(seed, streams::sample_sphere, i, tmp);
    out.push_back(UnitVector::from_direction(tmp));
  }
  return out;
}

double alpha_bound(int n, int d, double r, double c1) {
  if (r < 2.0) throw InvalidArgument("alpha_bound needs r >= 2");
  if (n < 1 || d < 0) throw InvalidArgument("alpha_bound needs n >= 1, d >= 0");
  double moment_factor = std::pow(c1 * r, d / 2.0);
  double rd = r * d;
  double binom_factor = std::exp(log_binom(rd + n - 1, rd) / (2.0 * r));
  return std::min(moment_factor, binom_factor);
}

SampleSizeBound sample_size_bound(int n, int d, double r, double t, double c1,
                                  std::int64_t cap) {
  if (t <= 0.0) throw InvalidArgument("sample_size_bound needs t > 0");
  double log_alpha = std::log(alpha_bound(n, d, r, c1));
  double log_count = std::log(t) + 2.0 * r * log_alpha;
  if (log_count > std::log(static_cast<double>(cap)))
    return {cap, true};
  double raw = std::exp(log_count);
  std::int64_t count = static_cast<std::int64_t>(std::ceil(raw));
  if (count < 1) count = 1;
  return {count, false};
}

namespace {

struct BatchBest {
  double value = -1.0;
  std::int64_t index = -1; // global sample counter
};

// Max of |g| over one batch of uniform samples; deterministic tie-break to
// the smallest sample index.
BatchBest scan_batch(const kernels::EvalPlan& plan, int n, std::uint64_t seed,
                     std::int64_t counter_base, std::int64_t batch_size) {
  const std::int64_t nchunks = chunk_count(batch_size);
  std::vector<BatchBest> part(nchunks);
  parallel_chunks(batch_size, [&](std::int64_t c, std::int64_t begin, std::int64_t end) {
    kernels::PointBlockBuffer buf;
    std::vector<double> tmp;
    const std::int64_t cnt = end - begin;
    fill_sphere_chunk(seed, streams::witness, counter_base + begin, cnt, n, buf, tmp);
    std::vector<double> vals((cnt + kernels::kLanes - 1) / kernels::kLanes * kernels::kLanes);
    kernels::eval_batch(plan, buf.xs.data(), cnt, vals.data());
    double m = kernels::max_abs(vals.data(), cnt);
    std::int64_t at = -1;
    for (std::int64_t j = 0; j < cnt; ++j) {
      if (std::fabs(vals[j]) == m) { at = j; break; }
    }
    part[c] = {m, counter_base + begin + at};
  });
  BatchBest best;
  for (const auto& p : part) {
    if (p.value > best.value) best = p;
  }
  return best;
}

UnitVector point_at(std::uint64_t seed, std::uint64_t stream, std::int64_t index, int n) {
  std::vector<double> tmp(n);
  sphere_vector(seed, stream, static_cast<std::uint64_t>(index), tmp);
  return UnitVector::from_direction(std::move(tmp));
}

} // namespace

Witness best_sample_point(const SymmetricTensor& g, std::int64_t samples,
                          std::uint64_t seed, std::int64_t counter_base) {
  if (samples < 1) throw InvalidArgument("need at least one sample");
  const kernels::EvalPlan plan = kernels::EvalPlan::from(g);
  BatchBest best = scan_batch(plan, g.vars(), seed, counter_base, samples);
  return {point_at(seed, streams::witness, best.index, g.vars()), best.value, 1};
}

Witness search_halfnorm(const SymmetricTensor& g, double r, double norm_value,
                        const SearchConfig& cfg, std::uint64_t stream) {
  if (norm_value < 0.0) throw InvalidArgument("norm estimate must be >= 0");
  if (cfg.sample_size < 1 || cfg.max_retries < 1)
    throw InvalidArgument("search needs sample_size >= 1 and max_retries >= 1");
  const double threshold = 0.5 * norm_value;
  const kernels::EvalPlan plan = kernels::EvalPlan::from(g);
  const int n = g.vars();

  BatchBest overall;
  for (int batch = 0; batch < cfg.max_retries; ++batch) {
    std::int64_t base = static_cast<std::int64_t>(stream + batch) * cfg.sample_size;
    BatchBest best = scan_batch(plan, n, cfg.seed, base, cfg.sample_size);
    if (best.value > overall.value) overall = best;
    if (best.value >= threshold) {
      Witness w{point_at(cfg.seed, streams::witness, best.index, n), best.value, batch + 1};
      // post-condition of the search; the maximizer qualifies by selection
      if (!(w.value >= threshold)) throw Error("witness postcondition violated");
      return w;
    }
  }
  throw SearchFailure("no point reached half the L_" +
                          (r > 0 ? std::to_string(r) : std::string("?")) +
                          " estimate after " + std::to_string(cfg.max_retries) +
                          " batches",
                      point_at(cfg.seed, streams::witness, overall.index, n),
                      overall.value, cfg.max_retries);
}

namespace {

// Decodes covering-grid point t into cube-surface coordinates: face = axis +
// side, free coordinates on a uniform grid over [-1,1]^(n-1).
void grid_point(std::int64_t t, int n, int axis_count_m, std::int64_t per_face,
                std::vector<double>& coords) {
  const int n_free = n - 1;
  std::int64_t face = t / per_face;
  std::int64_t rem = t % per_face;
  int axis = static_cast<int>(face / 2);
  double side = (face % 2 == 0) ? 1.0 : -1.0;
  coords[axis] = side;
  for (int i = n_free - 1; i >= 0; --i) {
    int coord = (i < axis) ? i : i + 1;
    std::int64_t digit = rem % (axis_count_m + 1);
    rem /= (axis_count_m + 1);
    coords[coord] = -1.0 + 2.0 * static_cast<double>(digit) / axis_count_m;
  }
}

} // namespace

CoveringResult covering_oracle(const SymmetricTensor& g, double eta, double budget) {
  if (!(eta > 0.0 && eta < 1.0)) throw InvalidArgument("covering needs eta in (0,1)");
  const int n = g.vars();
  const int d = g.degree();

  if (d == 0 || n == 1) {
    // finite cases: evaluate the sphere directly
    std::vector<double> e1(n, 0.0);
    e1[0] = 1.0;
    double lower = std::fabs(g.eval(e1));
    UnitVector best = UnitVector::from_direction(e1);
    if (n == 1 && d > 0) {
      std::vector<double> m1(n, -1.0);
      double neg = std::fabs(g.eval(m1));
      if (neg > lower) {
        lower = neg;
        best = UnitVector::from_direction(m1);
      }
    }
    return {best, lower, lower};
  }

  if (std::pow(3.0 * d / eta, n) > budget)
    throw BudgetExceeded("covering grid (3d/eta)^n exceeds the point budget");

  const double pitch = eta / (d * std::sqrt(static_cast<double>(n)));
  std::int64_t m = static_cast<std::int64_t>(std::ceil(2.0 / pitch));
  if (m % 2 != 0) ++m; // even m puts the axis points on the grid
  double per_face_d = std::pow(static_cast<double>(m + 1), n - 1);
  if (2.0 * n * per_face_d > budget)
    throw BudgetExceeded("covering grid exceeds the point budget");
  std::int64_t per_face = 1;
  for (int i = 0; i < n - 1; ++i) per_face *= (m + 1);
  const std::int64_t total = 2 * static_cast<std::int64_t>(n) * per_face;

  const kernels::EvalPlan plan = kernels::EvalPlan::from(g);
  const std::int64_t nchunks = chunk_count(total);
  std::vector<BatchBest> part(nchunks);
  parallel_chunks(total, [&](std::int64_t c, std::int64_t begin, std::int64_t end) {
    kernels::PointBlockBuffer buf;
    const std::int64_t cnt = end - begin;
    buf.resize(n, cnt);
    std::vector<double> coords(n);
    for (std::int64_t j = 0; j < cnt; ++j) {
      grid_point(begin + j, n, static_cast<int>(m), per_face, coords);
      double s = 0.0;
      for (double x : coords) s += x * x;
      double inv = 1.0 / std::sqrt(s);
      for (double& x : coords) x *= inv;
      buf.set_point(j, coords.data());
    }
    std::int64_t padded = (cnt + kernels::kLanes - 1) / kernels::kLanes * kernels::kLanes;
    for (std::int64_t j = cnt; j < padded; ++j) buf.set_point(j, coords.data());
    std::vector<double> vals(padded);
    kernels::eval_batch(plan, buf.xs.data(), cnt, vals.data());
    double mx = kernels::max_abs(vals.data(), cnt);
    std::int64_t at = -1;
    for (std::int64_t j = 0; j < cnt; ++j) {
      if (std::fabs(vals[j]) == mx) { at = j; break; }
    }
    part[c] = {mx, begin + at};
  });

  BatchBest best;
  for (const auto& p : part) {
    if (p.value > best.value) best = p;
  }

  std::vector<double> coords(n);
  grid_point(best.index, n, static_cast<int>(m), per_face, coords);
  CoveringResult out{UnitVector::from_direction(coords), best.value,
                     best.value / (1.0 - eta * eta)};
  return out;
}

UnitVector local_ascent(const SymmetricTensor& g, const UnitVector& v0, int iters) {
  const int n = g.vars();
  std::vector<double> v(v0.entries().begin(), v0.entries().end());
  double fv = g.eval(v);
  double step = 0.5;
  std::vector<double> cand(n);
  for (int it = 0; it < iters && step > 1e-16; ++it) {
    std::vector<double> grad = eval_gradient(g, v);
    double s = (fv >= 0.0) ? 1.0 : -1.0;
    double vg = 0.0;
    for (int i = 0; i < n; ++i) vg += grad[i] * v[i];
    double tn2 = 0.0;
    for (int i = 0; i < n; ++i) {
      grad[i] = s * (grad[i] - vg * v[i]); // tangential ascent direction
      tn2 += grad[i] * grad[i];
    }
    if (tn2 < 1e-30) break;
    bool accepted = false;
    while (step > 1e-16) {
      double norm2 = 0.0;
      for (int i = 0; i < n; ++i) {
        cand[i] = v[i] + step * grad[i];
        norm2 += cand[i] * cand[i];
      }
      double inv = 1.0 / std::sqrt(norm2);
      for (int i = 0; i < n; ++i) cand[i] *= inv;
      double fc = g.eval(cand);
      if (std::fabs(fc) > std::fabs(fv)) {
        v = cand;
        fv = fc;
        step = std::min(step * 1.5, 1.0);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
  }
  return UnitVector::from_direction(std::move(v));
}

} // namespace aprank
