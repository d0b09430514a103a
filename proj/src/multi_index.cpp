// SPDX-License-Identifier: Apache-2.0
#include "aprank/multi_index.hpp"

#include <map>
#include <mutex>

#include "aprank/binomial.hpp"
#include "aprank/common.hpp"

namespace aprank {

bool next_multi_index(std::span<std::int32_t> alpha) {
  const int n = static_cast<int>(alpha.size());
  // descending lex: decrement the rightmost movable entry, dump its tail
  int j = -1;
  for (int i = n - 2; i >= 0; --i) {
    if (alpha[i] > 0) { j = i; break; }
  }
  if (j < 0) return false;
  std::int32_t tail = alpha[n - 1];
  alpha[j] -= 1;
  alpha[n - 1] = 0;
  alpha[j + 1] = tail + 1;
  return true;
}

MonomialBasis::MonomialBasis(int n, int d) : n_(n), d_(d) {
  std::uint64_t dim = basis_dim(n, d);
  dim_ = static_cast<std::int64_t>(dim);
  exps_.resize(static_cast<std::size_t>(dim_) * n_);
  mult_.resize(dim_);
  std::vector<std::int32_t> alpha(n_, 0);
  alpha[0] = d_;
  for (std::int64_t idx = 0; idx < dim_; ++idx) {
    std::copy(alpha.begin(), alpha.end(), exps_.begin() + idx * n_);
    mult_[idx] = multinomial_coeff(d_, alpha);
    if (idx + 1 < dim_ && !next_multi_index(alpha))
      throw Error("monomial enumeration ended early");
  }
}

std::shared_ptr<const MonomialBasis> MonomialBasis::get(int n, int d) {
  if (n < 1) throw InvalidArgument("variable count must be >= 1");
  if (d < 0) throw InvalidArgument("degree must be >= 0");
  std::uint64_t dim = basis_dim(n, d);
  if (dim == kBinomSaturated || dim > static_cast<std::uint64_t>(kMaxBasisSize))
    throw BudgetExceeded("monomial basis for n=" + std::to_string(n) + ", d=" +
                         std::to_string(d) + " exceeds the size cap");

  static std::mutex mu;
  static std::map<std::pair<int, int>, std::weak_ptr<const MonomialBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, d}];
  if (auto p = slot.lock()) return p;
  std::shared_ptr<const MonomialBasis> fresh(new MonomialBasis(n, d));
  slot = fresh;
  return fresh;
}

std::int64_t MonomialBasis::index_of(std::span<const std::int32_t> alpha) const {
  if (static_cast<int>(alpha.size()) != n_)
    throw ShapeMismatch("multi-index length does not match variable count");
  std::int64_t rem = d_;
  std::uint64_t rank = 0;
  for (int i = 0; i < n_ - 1; ++i) {
    std::int32_t a = alpha[i];
    if (a < 0 || a > rem)
      throw ShapeMismatch("multi-index entries must be >= 0 and sum to the degree");
    // tuples with a larger entry at position i precede alpha; hockey stick
    if (rem - a - 1 >= 0) {
      int k = n_ - 1 - i;
      rank += binom_u64(rem - a - 1 + k, k);
    }
    rem -= a;
  }
  if (n_ >= 1 && alpha[n_ - 1] != rem)
    throw ShapeMismatch("multi-index does not sum to the degree");
  return static_cast<std::int64_t>(rank);
}

} // namespace aprank
