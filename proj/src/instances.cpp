// SPDX-License-Identifier: Apache-2.0
#include "aprank/instances.hpp"

#include "aprank/binomial.hpp"
#include "aprank/rng.hpp"

namespace aprank {

std::pair<SymmetricTensor, Decomposition> generate_instance(const InstanceSpec& spec) {
  if (spec.n < 1) throw InvalidArgument("instance needs n >= 1");
  if (spec.two_d < 2 || spec.two_d % 2 != 0)
    throw InvalidArgument("instance degree must be even and >= 2");
  if (spec.m < 0) throw InvalidArgument("planted rank must be >= 0");
  if (spec.epsilon < 0.0) throw InvalidArgument("epsilon must be >= 0");

  const int n = spec.n;
  const int d = spec.two_d;

  Decomposition planted(n, d);
  std::vector<double> dir(n);
  for (int i = 0; i < spec.m; ++i) {
    Rng rng(spec.seed, streams::instance_coeff, static_cast<std::uint64_t>(i));
    double c, unused;
    rng.gaussian_pair(c, unused);
    sphere_vector(spec.seed, streams::instance_vector, static_cast<std::uint64_t>(i), dir);
    planted.add(c, UnitVector::from_direction(dir));
  }

  SymmetricTensor f = materialize(planted);

  // noise term (eps/2) * (x_1^2 + ... + x_n^2)^(d/2): coefficient at 2*beta
  // is the multinomial C(d/2, beta); identically eps/2 on the sphere
  const int half = d / 2;
  const auto& basis = f.basis();
  std::vector<std::int32_t> beta(n);
  for (std::int64_t idx = 0; idx < f.dim(); ++idx) {
    auto alpha = basis.exponents(idx);
    bool even = true;
    for (int i = 0; i < n; ++i) {
      if (alpha[i] % 2 != 0) { even = false; break; }
      beta[i] = alpha[i] / 2;
    }
    if (even) f.coeff(idx) += 0.5 * spec.epsilon * multinomial_coeff(half, beta);
  }
  return {std::move(f), std::move(planted)};
}

} // namespace aprank
