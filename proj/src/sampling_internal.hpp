// SPDX-License-Identifier: Apache-2.0
#ifndef APRANK_SAMPLING_INTERNAL_HPP
#define APRANK_SAMPLING_INTERNAL_HPP

#include "aprank/kernels.hpp"
#include "aprank/rng.hpp"

namespace aprank {

// Fills buf with `count` uniform sphere points, sample indices
// [first, first+count) of the (seed, stream) counter space. Padding lanes
// replicate the last point so batch evaluation stays finite.
inline void fill_sphere_chunk(std::uint64_t seed, std::uint64_t stream,
                              std::int64_t first, std::int64_t count, int n,
                              kernels::PointBlockBuffer& buf,
                              std::vector<double>& tmp) {
  buf.resize(n, count);
  tmp.resize(n);
  for (std::int64_t j = 0; j < count; ++j) {
    sphere_vector(seed, stream, static_cast<std::uint64_t>(first + j), tmp);
    buf.set_point(j, tmp.data());
  }
  std::int64_t padded = (count + kernels::kLanes - 1) / kernels::kLanes * kernels::kLanes;
  for (std::int64_t j = count; j < padded; ++j) buf.set_point(j, tmp.data());
}

} // namespace aprank

#endif
