// SPDX-License-Identifier: Apache-2.0
#ifndef APRANK_INSTANCES_HPP
#define APRANK_INSTANCES_HPP

#include <cstdint>
#include <utility>

#include "aprank/tensor.hpp"

namespace aprank {

/// Random planted-rank test instance: m Gaussian-weighted rank-one terms plus
/// the isotropic noise tensor (eps/2) * (x_1^2 + ... + x_n^2)^(two_d/2), which
/// is constant eps/2 on the sphere.
struct InstanceSpec {
  int m = 1;       // planted rank (0 = noise only)
  int n = 2;
  int two_d = 2;   // even tensor degree
  double epsilon = 0.1;
  std::uint64_t seed = 0;
};

std::pair<SymmetricTensor, Decomposition> generate_instance(const InstanceSpec& spec);

} // namespace aprank

#endif
