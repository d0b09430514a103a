// SPDX-License-Identifier: Apache-2.0
#ifndef APRANK_RNG_HPP
#define APRANK_RNG_HPP

#include <cstdint>
#include <span>

namespace aprank {

// Counter-based randomness: every (seed, stream, counter) triple opens an
// independent generator, so sample i can be produced by any thread and the
// result never depends on the degree of parallelism.

namespace detail {
inline std::uint64_t splitmix_step(std::uint64_t& s) {
  s += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
} // namespace detail

class Rng {
public:
  Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    // fold the triple into one state; a few splitmix rounds decorrelate
    state_ = seed;
    state_ = detail::splitmix_step(state_) ^ stream;
    state_ = detail::splitmix_step(state_) ^ counter;
    (void)detail::splitmix_step(state_);
  }

  std::uint64_t next_u64() { return detail::splitmix_step(state_); }

  // Uniform in (0, 1].
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  void gaussian_pair(double& a, double& b);

private:
  std::uint64_t state_;
};

// Stream ids keep independent consumers of one seed from colliding in
// counter space.
namespace streams {
inline constexpr std::uint64_t lr_monte_carlo = 1;
inline constexpr std::uint64_t witness = 2;
inline constexpr std::uint64_t sample_sphere = 3;
inline constexpr std::uint64_t instance_coeff = 4;
inline constexpr std::uint64_t instance_vector = 5;
inline constexpr std::uint64_t maurey = 6;
inline constexpr std::uint64_t lmo = 7;
} // namespace streams

// Derive a child seed for an independent purpose within one run.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t s = seed ^ (0xA0761D6478BD642Full + tag);
  (void)detail::splitmix_step(s);
  return detail::splitmix_step(s);
}

// Standard Gaussian vector for sample `index` of (seed, stream).
void gaussian_vector(std::uint64_t seed, std::uint64_t stream,
                     std::uint64_t index, std::span<double> out);

// Uniform point on S^{n-1} (normalized Gaussian); out.size() == n.
void sphere_vector(std::uint64_t seed, std::uint64_t stream,
                   std::uint64_t index, std::span<double> out);

} // namespace aprank

#endif
