// SPDX-License-Identifier: Apache-2.0
#ifndef APRANK_TENSOR_HPP
#define APRANK_TENSOR_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "aprank/common.hpp"
#include "aprank/multi_index.hpp"

namespace aprank {

/// Point on S^{n-1}. Construction renormalizes inputs within 1e-6 of unit
/// Euclidean norm and rejects anything farther; from_direction() accepts any
/// nonzero vector and normalizes it.
class UnitVector {
public:
  explicit UnitVector(std::vector<double> entries);
  static UnitVector from_direction(std::vector<double> v);

  int n() const { return static_cast<int>(e_.size()); }
  std::span<const double> entries() const { return e_; }
  double operator[](int i) const { return e_[i]; }

private:
  struct normalized_tag {};
  UnitVector(std::vector<double> v, normalized_tag) : e_(std::move(v)) {}
  std::vector<double> e_;
};

double dot(const UnitVector& a, const UnitVector& b);

struct RankOneTerm {
  double coeff;
  UnitVector vector;
  int degree;
};

/// Weighted list of rank-one symmetric tensors; the number of terms is an
/// upper bound on the symmetric rank of its materialization.
class Decomposition {
public:
  Decomposition(int n, int d);

  int vars() const { return n_; }
  int degree() const { return d_; }
  std::int64_t size() const { return static_cast<std::int64_t>(terms_.size()); }
  bool empty() const { return terms_.empty(); }

  void add(double coeff, UnitVector v);
  std::span<const RankOneTerm> terms() const { return terms_; }
  const RankOneTerm& term(std::int64_t i) const { return terms_[i]; }

private:
  int n_;
  int d_;
  std::vector<RankOneTerm> terms_;
};

/// Dense symmetric d-tensor over n variables in the monomial index: one
/// coefficient per monomial, storing the sum of the equal raw entries, so
/// evaluation is plain polynomial evaluation with no multinomial factor.
class SymmetricTensor {
public:
  SymmetricTensor(int n, int d); // zero tensor

  int vars() const { return basis_->vars(); }
  int degree() const { return basis_->degree(); }
  std::int64_t dim() const { return basis_->size(); }
  const MonomialBasis& basis() const { return *basis_; }

  double coeff(std::int64_t idx) const { return c_[idx]; }
  double& coeff(std::int64_t idx) { return c_[idx]; }
  std::span<const double> coeffs() const { return c_; }
  std::span<double> coeffs() { return c_; }

  double eval(std::span<const double> x) const;
  double eval(const UnitVector& v) const { return eval(v.entries()); }

  SymmetricTensor& add_scaled(double alpha, const SymmetricTensor& other);
  SymmetricTensor& scale(double alpha);

private:
  std::shared_ptr<const MonomialBasis> basis_;
  std::vector<double> c_;
};

// q_v: coefficient at alpha is C(d, alpha) * prod v_i^{alpha_i}; eval(q_v, v) = 1.
SymmetricTensor rank_one(const UnitVector& v, int d);

double eval(const SymmetricTensor& f, std::span<const double> x);

// Euclidean gradient of f at x (length n).
std::vector<double> eval_gradient(const SymmetricTensor& f, std::span<const double> x);

// Bombieri-Weyl pairing: sum b_alpha c_alpha / C(d, alpha). Satisfies
// hs_inner(f, rank_one(v, d)) == eval(f, v).
double hs_inner(const SymmetricTensor& p, const SymmetricTensor& q);
double hs_norm(const SymmetricTensor& f);

SymmetricTensor linear_combine(std::span<const double> coeffs,
                               std::span<const SymmetricTensor> tensors);

SymmetricTensor subtract(const SymmetricTensor& a, const SymmetricTensor& b);

SymmetricTensor materialize(const Decomposition& D);

// Monomial-basis polynomial product, degree d_p + d_q. Throws BudgetExceeded
// when the result basis would exceed the hard cap.
SymmetricTensor multiply(const SymmetricTensor& p, const SymmetricTensor& q);

} // namespace aprank

#endif
