// SPDX-License-Identifier: Apache-2.0
//
// Test-only reference computations, deliberately independent of the library's
// evaluation / integration / sampling paths: naive raw-entry contraction,
// plain-STL Monte Carlo, direct double-factorial products.

#ifndef APRANK_TEST_ORACLES_HPP
#define APRANK_TEST_ORACLES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "aprank/tensor.hpp"

namespace oracles {

// Expands f into raw d-tensor entries (monomial coefficient / C(d,alpha) per
// equal entry) and contracts against the d-fold outer power of x by brute
// force over all n^d index tuples.
double eval_raw_contraction(const aprank::SymmetricTensor& f, std::span<const double> x);

// Gaussian-moment ratio E[Z^{2g}] / E[||Z||^{2|g|}] as a direct product of
// small double factorials over (n + 2j) factors. beta = 2g must be even.
double gaussian_ratio_moment(int n, std::span<const std::int32_t> beta);

// Plain std::mt19937_64 Monte Carlo for the sphere moment; returns mean and
// the standard error of the mean.
struct McResult {
  double mean = 0.0;
  double std_error = 0.0;
};
McResult mc_sphere_moment(int n, std::span<const std::int32_t> beta, std::int64_t samples,
                          std::uint64_t seed);

// Uniform sphere points from std::mt19937_64 (independent of the library RNG).
std::vector<std::vector<double>> std_sphere_points(int n, std::int64_t count,
                                                   std::uint64_t seed);

// max |f(x)| over std_sphere_points.
double sampled_sup(const aprank::SymmetricTensor& f, std::int64_t count, std::uint64_t seed);

// Naive polynomial evaluation with std::pow, independent of the power-table
// evaluators.
double eval_naive(const aprank::SymmetricTensor& f, std::span<const double> x);

} // namespace oracles

#endif
