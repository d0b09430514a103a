// SPDX-License-Identifier: Apache-2.0
#include "aprank/tensor.hpp"

#include <cmath>
#include <cstring>

#include "aprank/binomial.hpp"

namespace aprank {

namespace {

constexpr double kUnitTolerance = 1e-6;

void check_same_shape(const SymmetricTensor& a, const SymmetricTensor& b) {
  if (a.vars() != b.vars() || a.degree() != b.degree())
    throw ShapeMismatch("tensors have different shape (n or d)");
}

} // namespace

UnitVector::UnitVector(std::vector<double> entries) : e_(std::move(entries)) {
  if (e_.empty()) throw InvalidArgument("unit vector must have length >= 1");
  double s = 0.0;
  for (double x : e_) s += x * x;
  double norm = std::sqrt(s);
  if (std::fabs(norm - 1.0) > kUnitTolerance)
    throw InvalidArgument("vector norm " + std::to_string(norm) +
                          " is farther than 1e-6 from unit; normalize explicitly");
  double inv = 1.0 / norm;
  for (double& x : e_) x *= inv;
}

UnitVector UnitVector::from_direction(std::vector<double> v) {
  if (v.empty()) throw InvalidArgument("unit vector must have length >= 1");
  double s = 0.0;
  for (double x : v) s += x * x;
  if (s <= 0.0 || !std::isfinite(s))
    throw InvalidArgument("cannot normalize a zero or non-finite vector");
  double inv = 1.0 / std::sqrt(s);
  for (double& x : v) x *= inv;
  return UnitVector(std::move(v), normalized_tag{});
}

double dot(const UnitVector& a, const UnitVector& b) {
  if (a.n() != b.n()) throw ShapeMismatch("unit vectors have different length");
  double s = 0.0;
  for (int i = 0; i < a.n(); ++i) s += a[i] * b[i];
  return s;
}

Decomposition::Decomposition(int n, int d) : n_(n), d_(d) {
  if (n < 1) throw InvalidArgument("variable count must be >= 1");
  if (d < 0) throw InvalidArgument("degree must be >= 0");
}

void Decomposition::add(double coeff, UnitVector v) {
  if (v.n() != n_) throw ShapeMismatch("term vector length does not match n");
  terms_.push_back(RankOneTerm{coeff, std::move(v), d_});
}

SymmetricTensor::SymmetricTensor(int n, int d)
    : basis_(MonomialBasis::get(n, d)), c_(basis_->size(), 0.0) {}

double SymmetricTensor::eval(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != vars())
    throw ShapeMismatch("evaluation point length does not match n");
  const int n = vars();
  const int d = degree();
  // power table pw[i*(d+1)+e] = x_i^e
  std::vector<double> pw(static_cast<std::size_t>(n) * (d + 1));
  for (int i = 0; i < n; ++i) {
    pw[i * (d + 1)] = 1.0;
    for (int e = 1; e <= d; ++e) pw[i * (d + 1) + e] = pw[i * (d + 1) + e - 1] * x[i];
  }
  double acc = 0.0;
  for (std::int64_t idx = 0; idx < dim(); ++idx) {
    double c = c_[idx];
    if (c == 0.0) continue;
    auto alpha = basis_->exponents(idx);
    double t = c;
    for (int i = 0; i < n; ++i) {
      if (alpha[i] > 0) t *= pw[i * (d + 1) + alpha[i]];
    }
    acc += t;
  }
  return acc;
}

SymmetricTensor& SymmetricTensor::add_scaled(double alpha, const SymmetricTensor& other) {
  check_same_shape(*this, other);
  for (std::int64_t i = 0; i < dim(); ++i) c_[i] += alpha * other.c_[i];
  return *this;
}

SymmetricTensor& SymmetricTensor::scale(double alpha) {
  for (double& c : c_) c *= alpha;
  return *this;
}

SymmetricTensor rank_one(const UnitVector& v, int d) {
  SymmetricTensor q(v.n(), d);
  const int n = v.n();
  std::vector<double> pw(static_cast<std::size_t>(n) * (d + 1));
  for (int i = 0; i < n; ++i) {
    pw[i * (d + 1)] = 1.0;
    for (int e = 1; e <= d; ++e) pw[i * (d + 1) + e] = pw[i * (d + 1) + e - 1] * v[i];
  }
  const auto& basis = q.basis();
  for (std::int64_t idx = 0; idx < q.dim(); ++idx) {
    auto alpha = basis.exponents(idx);
    double t = basis.multinomial(idx);
    for (int i = 0; i < n; ++i) {
      if (alpha[i] > 0) t *= pw[i * (d + 1) + alpha[i]];
    }
    q.coeff(idx) = t;
  }
  return q;
}

double eval(const SymmetricTensor& f, std::span<const double> x) { return f.eval(x); }

std::vector<double> eval_gradient(const SymmetricTensor& f, std::span<const double> x) {
  if (static_cast<int>(x.size()) != f.vars())
    throw ShapeMismatch("evaluation point length does not match n");
  const int n = f.vars();
  const int d = f.degree();
  std::vector<double> pw(static_cast<std::size_t>(n) * (d + 1));
  for (int i = 0; i < n; ++i) {
    pw[i * (d + 1)] = 1.0;
    for (int e = 1; e <= d; ++e) pw[i * (d + 1) + e] = pw[i * (d + 1) + e - 1] * x[i];
  }
  std::vector<double> grad(n, 0.0);
  const auto& basis = f.basis();
  for (std::int64_t idx = 0; idx < f.dim(); ++idx) {
    double c = f.coeff(idx);
    if (c == 0.0) continue;
    auto alpha = basis.exponents(idx);
    for (int k = 0; k < n; ++k) {
      if (alpha[k] == 0) continue;
      double t = c * alpha[k] * pw[k * (d + 1) + alpha[k] - 1];
      for (int i = 0; i < n; ++i) {
        if (i != k && alpha[i] > 0) t *= pw[i * (d + 1) + alpha[i]];
      }
      grad[k] += t;
    }
  }
  return grad;
}

double hs_inner(const SymmetricTensor& p, const SymmetricTensor& q) {
  check_same_shape(p, q);
  const auto& basis = p.basis();
  double acc = 0.0;
  for (std::int64_t i = 0; i < p.dim(); ++i) {
    double t = p.coeff(i) * q.coeff(i);
    if (t != 0.0) acc += t / basis.multinomial(i);
  }
  return acc;
}

double hs_norm(const SymmetricTensor& f) {
  double s = hs_inner(f, f);
  return s <= 0.0 ? 0.0 : std::sqrt(s);
}

SymmetricTensor linear_combine(std::span<const double> coeffs,
                               std::span<const SymmetricTensor> tensors) {
  if (coeffs.size() != tensors.size())
    throw ShapeMismatch("coefficient and tensor counts differ");
  if (tensors.empty()) throw InvalidArgument("linear_combine needs at least one tensor");
  SymmetricTensor out(tensors[0].vars(), tensors[0].degree());
  for (std::size_t i = 0; i < tensors.size(); ++i) out.add_scaled(coeffs[i], tensors[i]);
  return out;
}

SymmetricTensor subtract(const SymmetricTensor& a, const SymmetricTensor& b) {
  SymmetricTensor out = a;
  out.add_scaled(-1.0, b);
  return out;
}

SymmetricTensor materialize(const Decomposition& D) {
  SymmetricTensor out(D.vars(), D.degree());
  for (const auto& t : D.terms()) out.add_scaled(t.coeff, rank_one(t.vector, D.degree()));
  return out;
}

namespace {

// Mixed-radix key over the first n-1 exponents (the last is implied by the
// degree); keys are additive under monomial multiplication.
constexpr std::int64_t kRadixCap = std::int64_t{1} << 22;

std::int64_t radix_size(int n, int D) {
  std::int64_t r = 1;
  for (int i = 0; i < n - 1; ++i) {
    r *= (D + 1);
    if (r > kRadixCap) return -1;
  }
  return r;
}

std::int64_t radix_key(std::span<const std::int32_t> alpha, int n, int D) {
  std::int64_t k = 0;
  for (int i = 0; i < n - 1; ++i) k = k * (D + 1) + alpha[i];
  return k;
}

} // namespace

SymmetricTensor multiply(const SymmetricTensor& p, const SymmetricTensor& q) {
  if (p.vars() != q.vars()) throw ShapeMismatch("tensor products need matching n");
  const int n = p.vars();
  const int D = p.degree() + q.degree();
  SymmetricTensor out(n, D); // MonomialBasis::get enforces the size cap

  struct Entry {
    std::int64_t key;
    double value;
  };
  auto collect = [&](const SymmetricTensor& f) {
    std::vector<Entry> v;
    v.reserve(f.dim());
    for (std::int64_t i = 0; i < f.dim(); ++i) {
      if (f.coeff(i) != 0.0)
        v.push_back({radix_key(f.basis().exponents(i), n, D), f.coeff(i)});
    }
    return v;
  };

  const std::int64_t rsize = radix_size(n, D);
  if (rsize > 0) {
    std::vector<double> acc(rsize, 0.0);
    auto pe = collect(p);
    const bool square = &p == &q;
    if (square) {
      for (std::size_t i = 0; i < pe.size(); ++i) {
        acc[2 * pe[i].key] += pe[i].value * pe[i].value;
        for (std::size_t j = i + 1; j < pe.size(); ++j)
          acc[pe[i].key + pe[j].key] += 2.0 * pe[i].value * pe[j].value;
      }
    } else {
      auto qe = collect(q);
      for (const auto& a : pe)
        for (const auto& b : qe) acc[a.key + b.key] += a.value * b.value;
    }
    const auto& basis = out.basis();
    for (std::int64_t idx = 0; idx < out.dim(); ++idx)
      out.coeff(idx) = acc[radix_key(basis.exponents(idx), n, D)];
    return out;
  }

  // fallback: rank each product index directly
  std::vector<std::int32_t> gamma(n);
  const auto& ob = out.basis();
  for (std::int64_t i = 0; i < p.dim(); ++i) {
    double a = p.coeff(i);
    if (a == 0.0) continue;
    auto ai = p.basis().exponents(i);
    for (std::int64_t j = 0; j < q.dim(); ++j) {
      double b = q.coeff(j);
      if (b == 0.0) continue;
      auto bj = q.basis().exponents(j);
      for (int t = 0; t < n; ++t) gamma[t] = ai[t] + bj[t];
      out.coeff(ob.index_of(gamma)) += a * b;
    }
  }
  return out;
}

} // namespace aprank
