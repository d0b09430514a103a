// SPDX-License-Identifier: Apache-2.0
#include "oracles.hpp"

#include <cmath>
#include <random>

namespace oracles {

using aprank::SymmetricTensor;

double eval_raw_contraction(const SymmetricTensor& f, std::span<const double> x) {
  const int n = f.vars();
  const int d = f.degree();
  const auto& basis = f.basis();
  if (d == 0) return f.coeff(0);
  std::vector<int> tuple(d, 0); // odometer over all n^d raw index tuples
  std::vector<std::int32_t> alpha(n);
  double acc = 0.0;
  for (;;) {
    std::fill(alpha.begin(), alpha.end(), 0);
    double xs = 1.0;
    for (int slot = 0; slot < d; ++slot) {
      alpha[tuple[slot]] += 1;
      xs *= x[tuple[slot]];
    }
    std::int64_t idx = basis.index_of(alpha);
    double entry = f.coeff(idx) / basis.multinomial(idx); // one raw entry
    acc += entry * xs;
    int slot = d - 1;
    while (slot >= 0 && tuple[slot] == n - 1) tuple[slot--] = 0;
    if (slot < 0) break;
    tuple[slot] += 1;
  }
  return acc;
}

double gaussian_ratio_moment(int n, std::span<const std::int32_t> beta) {
  double num = 1.0;
  std::int64_t total_half = 0;
  for (std::int32_t b : beta) {
    if (b % 2 != 0) return 0.0;
    for (int t = b - 1; t >= 3; t -= 2) num *= t; // (b-1)!!
    total_half += b / 2;
  }
  double den = 1.0;
  for (std::int64_t j = 0; j < total_half; ++j) den *= (n + 2.0 * j);
  return num / den;
}

McResult mc_sphere_moment(int n, std::span<const std::int32_t> beta, std::int64_t samples,
                          std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> x(n);
  double sum = 0.0, sumsq = 0.0;
  for (std::int64_t s = 0; s < samples; ++s) {
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) {
      x[i] = gauss(gen);
      norm2 += x[i] * x[i];
    }
    double inv = 1.0 / std::sqrt(norm2);
    double v = 1.0;
    for (int i = 0; i < n; ++i) v *= std::pow(x[i] * inv, beta[i]);
    sum += v;
    sumsq += v * v;
  }
  double mean = sum / samples;
  double var = (sumsq - samples * mean * mean) / (samples - 1.0);
  if (var < 0) var = 0;
  return {mean, std::sqrt(var / samples)};
}

std::vector<std::vector<double>> std_sphere_points(int n, std::int64_t count,
                                                   std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::vector<double>> pts(count, std::vector<double>(n));
  for (auto& p : pts) {
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (int i = 0; i < n; ++i) {
        p[i] = gauss(gen);
        norm2 += p[i] * p[i];
      }
    } while (norm2 < 1e-30);
    double inv = 1.0 / std::sqrt(norm2);
    for (int i = 0; i < n; ++i) p[i] *= inv;
  }
  return pts;
}

double sampled_sup(const SymmetricTensor& f, std::int64_t count, std::uint64_t seed) {
  double best = 0.0;
  // stream the points to keep memory flat at large counts
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int n = f.vars();
  std::vector<double> x(n);
  for (std::int64_t s = 0; s < count; ++s) {
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) {
      x[i] = gauss(gen);
      norm2 += x[i] * x[i];
    }
    double inv = 1.0 / std::sqrt(norm2);
    for (int i = 0; i < n; ++i) x[i] *= inv;
    best = std::max(best, std::fabs(eval_naive(f, x)));
  }
  return best;
}

double eval_naive(const SymmetricTensor& f, std::span<const double> x) {
  const auto& basis = f.basis();
  double acc = 0.0;
  for (std::int64_t idx = 0; idx < f.dim(); ++idx) {
    double c = f.coeff(idx);
    if (c == 0.0) continue;
    auto alpha = basis.exponents(idx);
    double t = c;
    for (int i = 0; i < f.vars(); ++i) t *= std::pow(x[i], static_cast<double>(alpha[i]));
    acc += t;
  }
  return acc;
}

} // namespace oracles
