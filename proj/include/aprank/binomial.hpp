// SPDX-License-Identifier: Apache-2.0
#ifndef APRANK_BINOMIAL_HPP
#define APRANK_BINOMIAL_HPP

#include <cstdint>
#include <span>

namespace aprank {

// Sentinel returned by binom_u64 when the exact value does not fit in 64 bits.
inline constexpr std::uint64_t kBinomSaturated = UINT64_MAX;

// Exact C(top, bot) in integer arithmetic, saturating to kBinomSaturated on
// overflow. Returns 0 for bot < 0 or bot > top.
std::uint64_t binom_u64(std::int64_t top, std::int64_t bot);

// log C(top, bot) via lgamma; requires 0 <= bot <= top.
double log_binom(double top, double bot);

// C(top, bot) as a double: exact when it fits in 64 bits, lgamma otherwise.
double binom_double(std::int64_t top, std::int64_t bot);

// Multinomial coefficient d! / (alpha_1! ... alpha_n!), sum(alpha) == d.
// Exact integer path when it fits, double product of binomials otherwise.
double multinomial_coeff(int d, std::span<const std::int32_t> alpha);

// log((2m-1)!!) for m >= 0; log(1) = 0 at m = 0.
double log_dfact_odd(std::int64_t m);

// dim P_{n,d} = C(n+d-1, d), saturating.
std::uint64_t basis_dim(int n, int d);

} // namespace aprank

#endif
