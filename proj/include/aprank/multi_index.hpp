// SPDX-License-Identifier: Apache-2.0
#ifndef APRANK_MULTI_INDEX_HPP
#define APRANK_MULTI_INDEX_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace aprank {

/// All exponent vectors alpha with |alpha| = d over n variables, enumerated in
/// descending lexicographic order: (d,0,...,0) first, (0,...,0,d) last. A
/// basis instance is immutable and shared between all tensors of one shape.
class MonomialBasis {
public:
  // Cached, thread-safe accessor. Throws BudgetExceeded when the basis would
  // exceed kMaxBasisSize entries.
  static std::shared_ptr<const MonomialBasis> get(int n, int d);

  static constexpr std::int64_t kMaxBasisSize = 8'000'000;

  int vars() const { return n_; }
  int degree() const { return d_; }
  std::int64_t size() const { return dim_; }

  std::span<const std::int32_t> exponents(std::int64_t idx) const {
    return {exps_.data() + idx * n_, static_cast<std::size_t>(n_)};
  }

  // C(d, alpha) for the monomial at idx.
  double multinomial(std::int64_t idx) const { return mult_[idx]; }

  // Rank of alpha in the enumeration; throws ShapeMismatch on bad input.
  std::int64_t index_of(std::span<const std::int32_t> alpha) const;

private:
  MonomialBasis(int n, int d);

  int n_;
  int d_;
  std::int64_t dim_;
  std::vector<std::int32_t> exps_; // dim * n, row per monomial
  std::vector<double> mult_;       // dim
};

// In-place successor in descending-lex order; returns false after the last
// element (0,...,0,d). alpha must be a valid exponent vector.
bool next_multi_index(std::span<std::int32_t> alpha);

} // namespace aprank

#endif
