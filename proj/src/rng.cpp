// SPDX-License-Identifier: Apache-2.0
#include "aprank/rng.hpp"

#include <cmath>
#include <numbers>

namespace aprank {

void Rng::gaussian_pair(double& a, double& b) {
  double u1 = next_unit(); // in (0,1], so the log is finite
  double u2 = next_unit();
  double m = std::sqrt(-2.0 * std::log(u1));
  double t = 2.0 * std::numbers::pi * u2;
  a = m * std::cos(t);
  b = m * std::sin(t);
}

void gaussian_vector(std::uint64_t seed, std::uint64_t stream,
                     std::uint64_t index, std::span<double> out) {
  Rng r(seed, stream, index);
  std::size_t i = 0;
  while (i + 1 < out.size()) {
    r.gaussian_pair(out[i], out[i + 1]);
    i += 2;
  }
  if (i < out.size()) {
    double a, b;
    r.gaussian_pair(a, b);
    out[i] = a;
  }
}

void sphere_vector(std::uint64_t seed, std::uint64_t stream,
                   std::uint64_t index, std::span<double> out) {
  // redraw on a (measure-zero) degenerate norm; bump the counter's high bits
  // so retries stay deterministic
  for (std::uint64_t attempt = 0;; ++attempt) {
    gaussian_vector(seed, stream, index + (attempt << 48), out);
    double s = 0.0;
    for (double x : out) s += x * x;
    if (s > 1e-280) {
      double inv = 1.0 / std::sqrt(s);
      for (double& x : out) x *= inv;
      return;
    }
  }
}

} // namespace aprank
