// SPDX-License-Identifier: Apache-2.0
#include "aprank/binomial.hpp"

#include <cmath>

namespace aprank {

std::uint64_t binom_u64(std::int64_t top, std::int64_t bot) {
  if (bot < 0 || bot > top) return 0;
  bot = std::min(bot, top - bot);
  unsigned __int128 r = 1;
  for (std::int64_t i = 1; i <= bot; ++i) {
    r = r * static_cast<unsigned __int128>(top - bot + i);
    r /= static_cast<unsigned __int128>(i); // exact: C(top-bot+i, i) divides
    if (r >= kBinomSaturated) return kBinomSaturated;
  }
  return static_cast<std::uint64_t>(r);
}

double log_binom(double top, double bot) {
  if (bot <= 0 || bot >= top) return 0.0;
  return std::lgamma(top + 1.0) - std::lgamma(bot + 1.0) - std::lgamma(top - bot + 1.0);
}

double binom_double(std::int64_t top, std::int64_t bot) {
  if (bot < 0 || bot > top) return 0.0;
  std::uint64_t exact = binom_u64(top, bot);
  if (exact != kBinomSaturated) return static_cast<double>(exact);
  return std::exp(log_binom(static_cast<double>(top), static_cast<double>(bot)));
}

double multinomial_coeff(int d, std::span<const std::int32_t> alpha) {
  // C(d, alpha) = prod_i C(s_i, alpha_i) with s_i the prefix sums
  unsigned __int128 r = 1;
  std::int64_t s = 0;
  bool exact = true;
  for (std::int32_t a : alpha) {
    s += a;
    std::uint64_t b = binom_u64(s, a);
    if (b == kBinomSaturated) { exact = false; break; }
    r *= b;
    if (r >= kBinomSaturated) { exact = false; break; }
  }
  if (exact && s == d) return static_cast<double>(static_cast<std::uint64_t>(r));
  double p = 1.0;
  s = 0;
  for (std::int32_t a : alpha) {
    s += a;
    p *= binom_double(s, a);
  }
  return p;
}

double log_dfact_odd(std::int64_t m) {
  if (m <= 0) return 0.0;
  // (2m-1)!! = (2m)! / (2^m m!)
  double dm = static_cast<double>(m);
  return std::lgamma(2.0 * dm + 1.0) - dm * std::log(2.0) - std::lgamma(dm + 1.0);
}

std::uint64_t basis_dim(int n, int d) {
  if (n <= 0 || d < 0) return 0;
  return binom_u64(static_cast<std::int64_t>(n) + d - 1, d);
}

} // namespace aprank
