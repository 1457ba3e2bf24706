// Copyright 2026 the stategeom authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "stategeom/types.hpp"

namespace stategeom {

// Polynomial of total degree <= 2 on R^m with exact coefficient storage:
//
//   value(x) = constant + linear.dot(x) + x.dot(quadratic * x)
//
// `quadratic` is symmetric; an empty (0x0) matrix stands for a zero quadratic
// part so that tensors with many components stay cheap.
template <typename Scalar>
struct Poly {
  Scalar constant{};
  VectorX<Scalar> linear;
  MatrixX<Scalar> quadratic;

  Poly() = default;
  explicit Poly(Eigen::Index dim) : constant(Scalar(0)), linear(VectorX<Scalar>::Zero(dim)) {}

  Eigen::Index dim() const { return linear.size(); }
  bool has_quadratic() const { return quadratic.size() > 0; }

  static Poly constant_poly(Eigen::Index dim, Scalar value) {
    Poly p(dim);
    p.constant = value;
    return p;
  }
  static Poly linear_poly(const VectorX<Scalar>& coeffs, Scalar constant = Scalar(0)) {
    Poly p(coeffs.size());
    p.constant = constant;
    p.linear = coeffs;
    return p;
  }
  static Poly coordinate(Eigen::Index dim, Eigen::Index k) {
    Poly p(dim);
    p.linear(k) = Scalar(1);
    return p;
  }
  // value = x . (q x); q need not be symmetric, it is symmetrized here.
  static Poly quadratic_poly(const MatrixX<Scalar>& q) {
    Poly p(q.rows());
    p.quadratic = ((q + q.transpose()) / Scalar(2)).eval();
    return p;
  }

  void ensure_quadratic() {
    if (!has_quadratic()) quadratic = MatrixX<Scalar>::Zero(dim(), dim());
  }
};

// Bilinear (never conjugating) inner product, so complex scalars behave like
// a plain coefficient extension.
template <typename Scalar>
Scalar dot_bilinear(const VectorX<Scalar>& u, const VectorX<Scalar>& v) {
  return u.cwiseProduct(v).sum();
}

template <typename Scalar>
Scalar eval(const Poly<Scalar>& p, const VectorX<Scalar>& x) {
  if (x.size() != p.dim()) throw DimensionMismatchError("poly/point dimension mismatch");
  Scalar v = p.constant + dot_bilinear<Scalar>(p.linear, x);
  if (p.has_quadratic()) v += dot_bilinear<Scalar>(x, p.quadratic * x);
  return v;
}

template <typename Scalar>
VectorX<Scalar> gradient(const Poly<Scalar>& p, const VectorX<Scalar>& x) {
  if (x.size() != p.dim()) throw DimensionMismatchError("poly/point dimension mismatch");
  VectorX<Scalar> g = p.linear;
  if (p.has_quadratic()) g += Scalar(2) * (p.quadratic * x);
  return g;
}

// Constant Hessian of the polynomial (2 * quadratic).
template <typename Scalar>
MatrixX<Scalar> hessian(const Poly<Scalar>& p) {
  if (p.has_quadratic()) return Scalar(2) * p.quadratic;
  return MatrixX<Scalar>::Zero(p.dim(), p.dim());
}

// d/dx_k, a polynomial of degree <= 1.
template <typename Scalar>
Poly<Scalar> partial(const Poly<Scalar>& p, Eigen::Index k) {
  Poly<Scalar> d(p.dim());
  d.constant = p.linear(k);
  if (p.has_quadratic()) d.linear = Scalar(2) * p.quadratic.row(k).transpose();
  return d;
}

template <typename Scalar>
double max_abs_coeff(const Poly<Scalar>& p) {
  double m = std::abs(p.constant);
  for (Eigen::Index i = 0; i < p.linear.size(); ++i) m = std::max(m, std::abs(p.linear(i)));
  if (p.has_quadratic()) {
    m = std::max(m, p.quadratic.cwiseAbs().maxCoeff());
  }
  return m;
}

template <typename Scalar>
int degree(const Poly<Scalar>& p, double tol = 0.0) {
  if (p.has_quadratic() && p.quadratic.cwiseAbs().maxCoeff() > tol) return 2;
  if (p.linear.size() > 0 && p.linear.cwiseAbs().maxCoeff() > tol) return 1;
  return 0;
}

template <typename Scalar>
Poly<Scalar> operator+(const Poly<Scalar>& a, const Poly<Scalar>& b) {
  if (a.dim() != b.dim()) throw DimensionMismatchError("poly dimension mismatch");
  Poly<Scalar> r(a.dim());
  r.constant = a.constant + b.constant;
  r.linear = a.linear + b.linear;
  if (a.has_quadratic() && b.has_quadratic()) {
    r.quadratic = a.quadratic + b.quadratic;
  } else if (a.has_quadratic()) {
    r.quadratic = a.quadratic;
  } else if (b.has_quadratic()) {
    r.quadratic = b.quadratic;
  }
  return r;
}

template <typename Scalar>
Poly<Scalar> operator-(const Poly<Scalar>& a, const Poly<Scalar>& b) {
  return a + (Scalar(-1) * b);
}

template <typename Scalar>
Poly<Scalar> operator*(Scalar s, const Poly<Scalar>& p) {
  Poly<Scalar> r = p;
  r.constant *= s;
  r.linear *= s;
  if (r.has_quadratic()) r.quadratic *= s;
  return r;
}

template <typename Scalar>
void add_into(Poly<Scalar>& acc, const Poly<Scalar>& p, Scalar weight) {
  acc.constant += weight * p.constant;
  acc.linear += weight * p.linear;
  if (p.has_quadratic()) {
    acc.ensure_quadratic();
    acc.quadratic += weight * p.quadratic;
  }
}

// Scratch space for degree-3 coefficients produced transiently while
// multiplying a quadratic by a linear factor.  A commutator of two quadratic
// fields is accepted only when the accumulated cubic part cancels.
template <typename Scalar>
struct CubicScratch {
  Eigen::Index m = 0;
  std::vector<Scalar> t;
  double scale = 0.0;

  bool used() const { return m != 0; }

  void ensure(Eigen::Index dim) {
    if (m == 0) {
      m = dim;
      t.assign(static_cast<std::size_t>(m * m * m), Scalar(0));
    }
  }

  // Accumulates weight * (x^T q x) * (g . x).
  void add_quad_lin(const MatrixX<Scalar>& q, const VectorX<Scalar>& g, Scalar weight) {
    ensure(q.rows());
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < m; ++j) {
        const Scalar qij = q(i, j);
        if (qij == Scalar(0)) continue;
        for (Eigen::Index k = 0; k < m; ++k) {
          if (g(k) == Scalar(0)) continue;
          const Scalar v = weight * qij * g(k);
          t[static_cast<std::size_t>((i * m + j) * m + k)] += v;
          scale = std::max(scale, std::abs(v));
        }
      }
    }
  }

  // Largest coefficient of the cubic polynomial, i.e. after grouping slots
  // that belong to the same monomial x_i x_j x_k.
  double max_monomial() const {
    if (m == 0) return 0.0;
    std::vector<Scalar> mono(t.size(), Scalar(0));
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < m; ++j) {
        for (Eigen::Index k = 0; k < m; ++k) {
          Eigen::Index a = i, b = j, c = k;
          if (a > b) std::swap(a, b);
          if (b > c) std::swap(b, c);
          if (a > b) std::swap(a, b);
          mono[static_cast<std::size_t>((a * m + b) * m + c)] +=
              t[static_cast<std::size_t>((i * m + j) * m + k)];
        }
      }
    }
    double worst = 0.0;
    for (const Scalar& v : mono) worst = std::max(worst, std::abs(v));
    return worst;
  }
};

// acc += weight * a * b, with the degree-3 part (if any) routed to `cubic`.
// Throws DegreeOverflowError when the product has degree 4, or degree 3 with
// no scratch supplied.
template <typename Scalar>
void multiply_accumulate(const Poly<Scalar>& a, const Poly<Scalar>& b, Scalar weight,
                         Poly<Scalar>& acc, CubicScratch<Scalar>* cubic) {
  if (a.dim() != b.dim()) throw DimensionMismatchError("poly dimension mismatch");
  const bool a_lin = a.linear.size() > 0 && !a.linear.isZero(0);
  const bool b_lin = b.linear.size() > 0 && !b.linear.isZero(0);
  const bool a_quad = a.has_quadratic() && !a.quadratic.isZero(0);
  const bool b_quad = b.has_quadratic() && !b.quadratic.isZero(0);
  if (a_quad && b_quad) throw DegreeOverflowError("polynomial product has degree 4");

  acc.constant += weight * a.constant * b.constant;
  if (a_lin) acc.linear += (weight * b.constant) * a.linear;
  if (b_lin) acc.linear += (weight * a.constant) * b.linear;
  if (a_quad && b.constant != Scalar(0)) {
    acc.ensure_quadratic();
    acc.quadratic += (weight * b.constant) * a.quadratic;
  }
  if (b_quad && a.constant != Scalar(0)) {
    acc.ensure_quadratic();
    acc.quadratic += (weight * a.constant) * b.quadratic;
  }
  if (a_lin && b_lin) {
    acc.ensure_quadratic();
    acc.quadratic +=
        (weight / Scalar(2)) * (a.linear * b.linear.transpose() + b.linear * a.linear.transpose());
  }
  if (a_quad && b_lin) {
    if (!cubic) throw DegreeOverflowError("polynomial product has degree 3");
    cubic->add_quad_lin(a.quadratic, b.linear, weight);
  }
  if (b_quad && a_lin) {
    if (!cubic) throw DegreeOverflowError("polynomial product has degree 3");
    cubic->add_quad_lin(b.quadratic, a.linear, weight);
  }
}

template <typename Scalar>
Poly<Scalar> multiply(const Poly<Scalar>& a, const Poly<Scalar>& b) {
  Poly<Scalar> r(a.dim());
  multiply_accumulate(a, b, Scalar(1), r, static_cast<CubicScratch<Scalar>*>(nullptr));
  return r;
}

template <typename Scalar>
Poly<Scalar> operator*(const Poly<Scalar>& a, const Poly<Scalar>& b) {
  return multiply(a, b);
}

namespace detail {
template <typename Scalar>
void require_cubic_cancels(const CubicScratch<Scalar>& cubic, const char* what) {
  if (!cubic.used()) return;
  const double residual = cubic.max_monomial();
  if (residual > kCoefficientTol * tolerance_scale(cubic.scale)) {
    throw DegreeOverflowError(std::string(what) + ": result has degree 3 (residual " +
                              std::to_string(residual) + ")");
  }
}
}  // namespace detail

// Vector field on R^m whose components are degree <= 2 polynomials.
template <typename Scalar>
struct PolyVectorField {
  std::vector<Poly<Scalar>> comp;

  PolyVectorField() = default;
  explicit PolyVectorField(Eigen::Index dim)
      : comp(static_cast<std::size_t>(dim), Poly<Scalar>(dim)) {}

  Eigen::Index dim() const { return static_cast<Eigen::Index>(comp.size()); }

  VectorX<Scalar> operator()(const VectorX<Scalar>& x) const {
    VectorX<Scalar> v(dim());
    for (Eigen::Index i = 0; i < dim(); ++i) v(i) = eval(comp[static_cast<std::size_t>(i)], x);
    return v;
  }
};

// Contravariant rank-2 tensor field with polynomial components T^{ij}.
template <typename Scalar>
struct PolyTensorField {
  Eigen::Index dimension = 0;
  std::vector<Poly<Scalar>> comp;  // (i, j) row-major

  PolyTensorField() = default;
  explicit PolyTensorField(Eigen::Index dim)
      : dimension(dim), comp(static_cast<std::size_t>(dim * dim), Poly<Scalar>(dim)) {}

  Eigen::Index dim() const { return dimension; }

  Poly<Scalar>& at(Eigen::Index i, Eigen::Index j) {
    return comp[static_cast<std::size_t>(i * dimension + j)];
  }
  const Poly<Scalar>& at(Eigen::Index i, Eigen::Index j) const {
    return comp[static_cast<std::size_t>(i * dimension + j)];
  }

  MatrixX<Scalar> operator()(const VectorX<Scalar>& x) const {
    MatrixX<Scalar> v(dimension, dimension);
    for (Eigen::Index i = 0; i < dimension; ++i)
      for (Eigen::Index j = 0; j < dimension; ++j) v(i, j) = eval(at(i, j), x);
    return v;
  }
};

template <typename Scalar>
PolyVectorField<Scalar> operator+(const PolyVectorField<Scalar>& a,
                                  const PolyVectorField<Scalar>& b) {
  if (a.dim() != b.dim()) throw DimensionMismatchError("field dimension mismatch");
  PolyVectorField<Scalar> r(a.dim());
  for (std::size_t i = 0; i < a.comp.size(); ++i) r.comp[i] = a.comp[i] + b.comp[i];
  return r;
}

template <typename Scalar>
PolyVectorField<Scalar> operator*(Scalar s, const PolyVectorField<Scalar>& v) {
  PolyVectorField<Scalar> r(v.dim());
  for (std::size_t i = 0; i < v.comp.size(); ++i) r.comp[i] = s * v.comp[i];
  return r;
}

template <typename Scalar>
double max_abs_coeff(const PolyVectorField<Scalar>& v) {
  double m = 0.0;
  for (const auto& p : v.comp) m = std::max(m, max_abs_coeff(p));
  return m;
}

template <typename Scalar>
double max_abs_coeff(const PolyTensorField<Scalar>& t) {
  double m = 0.0;
  for (const auto& p : t.comp) m = std::max(m, max_abs_coeff(p));
  return m;
}

template <typename Scalar>
double coeff_distance(const Poly<Scalar>& a, const Poly<Scalar>& b) {
  return max_abs_coeff(a - b);
}

template <typename Scalar>
double coeff_distance(const PolyVectorField<Scalar>& a, const PolyVectorField<Scalar>& b) {
  if (a.dim() != b.dim()) throw DimensionMismatchError("field dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.comp.size(); ++i)
    m = std::max(m, coeff_distance(a.comp[i], b.comp[i]));
  return m;
}

template <typename Scalar>
double coeff_distance(const PolyTensorField<Scalar>& a, const PolyTensorField<Scalar>& b) {
  if (a.dim() != b.dim()) throw DimensionMismatchError("tensor dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.comp.size(); ++i)
    m = std::max(m, coeff_distance(a.comp[i], b.comp[i]));
  return m;
}

template <typename Scalar>
bool is_antisymmetric(const PolyTensorField<Scalar>& t, double tol = kCoefficientTol) {
  for (Eigen::Index i = 0; i < t.dim(); ++i)
    for (Eigen::Index j = 0; j < t.dim(); ++j)
      if (max_abs_coeff(t.at(i, j) + t.at(j, i)) > tol) return false;
  return true;
}

template <typename Scalar>
bool is_symmetric(const PolyTensorField<Scalar>& t, double tol = kCoefficientTol) {
  for (Eigen::Index i = 0; i < t.dim(); ++i)
    for (Eigen::Index j = 0; j < t.dim(); ++j)
      if (max_abs_coeff(t.at(i, j) - t.at(j, i)) > tol) return false;
  return true;
}

// X_f = T(df, .), i.e. X^j = sum_i T^{ij} d_i f.
template <typename Scalar>
PolyVectorField<Scalar> contract_df(const PolyTensorField<Scalar>& t, const Poly<Scalar>& f) {
  if (t.dim() != f.dim()) throw DimensionMismatchError("tensor/function dimension mismatch");
  const Eigen::Index m = t.dim();
  PolyVectorField<Scalar> x(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    CubicScratch<Scalar> cubic;
    for (Eigen::Index i = 0; i < m; ++i) {
      multiply_accumulate(t.at(i, j), partial(f, i), Scalar(1), x.comp[static_cast<std::size_t>(j)],
                          &cubic);
    }
    detail::require_cubic_cancels(cubic, "contract_df");
  }
  return x;
}

// Directional derivative V(f) = sum_j V^j d_j f.
template <typename Scalar>
Poly<Scalar> apply(const PolyVectorField<Scalar>& v, const Poly<Scalar>& f) {
  if (v.dim() != f.dim()) throw DimensionMismatchError("field/function dimension mismatch");
  Poly<Scalar> r(f.dim());
  CubicScratch<Scalar> cubic;
  for (Eigen::Index j = 0; j < v.dim(); ++j) {
    multiply_accumulate(v.comp[static_cast<std::size_t>(j)], partial(f, j), Scalar(1), r, &cubic);
  }
  detail::require_cubic_cancels(cubic, "apply");
  return r;
}

// Exact coefficients of [V, W]^i = V^j d_j W^i - W^j d_j V^i.  Degree-3 terms
// must cancel; otherwise the result leaves the representation and a
// DegreeOverflowError is raised.
template <typename Scalar>
PolyVectorField<Scalar> commutator(const PolyVectorField<Scalar>& v,
                                   const PolyVectorField<Scalar>& w) {
  if (v.dim() != w.dim()) throw DimensionMismatchError("field dimension mismatch");
  const Eigen::Index m = v.dim();
  PolyVectorField<Scalar> r(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    CubicScratch<Scalar> cubic;
    Poly<Scalar>& acc = r.comp[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < m; ++j) {
      const auto& vj = v.comp[static_cast<std::size_t>(j)];
      const auto& wj = w.comp[static_cast<std::size_t>(j)];
      multiply_accumulate(vj, partial(w.comp[static_cast<std::size_t>(i)], j), Scalar(1), acc,
                          &cubic);
      multiply_accumulate(wj, partial(v.comp[static_cast<std::size_t>(i)], j), Scalar(-1), acc,
                          &cubic);
    }
    detail::require_cubic_cancels(cubic, "commutator");
  }
  return r;
}

// Exact coefficients of
//   (L_V T)^{ij} = V^k d_k T^{ij} - T^{kj} d_k V^i - T^{ik} d_k V^j.
template <typename Scalar>
PolyTensorField<Scalar> lie_derivative(const PolyVectorField<Scalar>& v,
                                       const PolyTensorField<Scalar>& t) {
  if (v.dim() != t.dim()) throw DimensionMismatchError("field/tensor dimension mismatch");
  const Eigen::Index m = t.dim();
  PolyTensorField<Scalar> r(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      CubicScratch<Scalar> cubic;
      Poly<Scalar>& acc = r.at(i, j);
      for (Eigen::Index k = 0; k < m; ++k) {
        const auto& vk = v.comp[static_cast<std::size_t>(k)];
        multiply_accumulate(vk, partial(t.at(i, j), k), Scalar(1), acc, &cubic);
        multiply_accumulate(t.at(k, j), partial(v.comp[static_cast<std::size_t>(i)], k),
                            Scalar(-1), acc, &cubic);
        multiply_accumulate(t.at(i, k), partial(v.comp[static_cast<std::size_t>(j)], k),
                            Scalar(-1), acc, &cubic);
      }
      detail::require_cubic_cancels(cubic, "lie_derivative");
    }
  }
  return r;
}

// {f, g} = T(df, dg) as a polynomial; only valid while the result stays within
// degree 2.
template <typename Scalar>
Poly<Scalar> bracket_poly(const PolyTensorField<Scalar>& t, const Poly<Scalar>& f,
                          const Poly<Scalar>& g) {
  if (t.dim() != f.dim() || t.dim() != g.dim())
    throw DimensionMismatchError("bracket dimension mismatch");
  const Eigen::Index m = t.dim();
  Poly<Scalar> r(m);
  CubicScratch<Scalar> cubic;
  for (Eigen::Index i = 0; i < m; ++i) {
    const Poly<Scalar> dfi = partial(f, i);
    for (Eigen::Index j = 0; j < m; ++j) {
      const Poly<Scalar> term = dfi * partial(g, j);
      multiply_accumulate(t.at(i, j), term, Scalar(1), r, &cubic);
    }
  }
  detail::require_cubic_cancels(cubic, "bracket_poly");
  return r;
}

// {f, g}(x) evaluated pointwise; no degree restriction.
template <typename Scalar>
Scalar bracket_value(const PolyTensorField<Scalar>& t, const Poly<Scalar>& f,
                     const Poly<Scalar>& g, const VectorX<Scalar>& x) {
  return dot_bilinear<Scalar>(gradient(f, x), t(x) * gradient(g, x));
}

// Exact gradient of {f, g} at x, by the product rule over the coefficient
// data.  Lets brackets of brackets be evaluated without finite differences.
template <typename Scalar>
VectorX<Scalar> bracket_gradient(const PolyTensorField<Scalar>& t, const Poly<Scalar>& f,
                                 const Poly<Scalar>& g, const VectorX<Scalar>& x) {
  const Eigen::Index m = t.dim();
  const VectorX<Scalar> df = gradient(f, x);
  const VectorX<Scalar> dg = gradient(g, x);
  const MatrixX<Scalar> hf = hessian(f);
  const MatrixX<Scalar> hg = hessian(g);
  const MatrixX<Scalar> tx = t(x);
  VectorX<Scalar> out = VectorX<Scalar>::Zero(m);
  // d_k T^{ij} term.
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) {
      const Scalar w = df(i) * dg(j);
      if (w == Scalar(0)) continue;
      out += w * gradient(t.at(i, j), x);
    }
  out += hf * (tx * dg);
  out += hg * (tx.transpose() * df);
  return out;
}

// Composition with the affine map x = M y + m0 (exact on coefficients).
template <typename Scalar>
Poly<Scalar> compose_affine(const Poly<Scalar>& p, const MatrixX<Scalar>& M,
                            const VectorX<Scalar>& m0) {
  if (M.rows() != p.dim() || m0.size() != p.dim())
    throw DimensionMismatchError("affine map dimension mismatch");
  Poly<Scalar> r(M.cols());
  r.constant = p.constant + dot_bilinear<Scalar>(p.linear, m0);
  r.linear = M.transpose() * p.linear;
  if (p.has_quadratic()) {
    r.constant += dot_bilinear<Scalar>(m0, p.quadratic * m0);
    r.linear += Scalar(2) * (M.transpose() * (p.quadratic * m0));
    MatrixX<Scalar> q = M.transpose() * p.quadratic * M;
    if (!q.isZero(0)) r.quadratic = ((q + q.transpose()) / Scalar(2)).eval();
  }
  return r;
}

// Pushforward of a contravariant tensor along the affine chart y = A x + b:
//   T'(y)^{ab} = A_{ai} A_{bj} T^{ij}(x(y)).
template <typename Scalar>
PolyTensorField<Scalar> pushforward_affine(const PolyTensorField<Scalar>& t,
                                           const MatrixX<Scalar>& A, const VectorX<Scalar>& b) {
  const Eigen::Index m = t.dim();
  Eigen::FullPivLU<MatrixX<Scalar>> lu(A);
  if (!lu.isInvertible()) throw ChartError("chart matrix is not invertible");
  const MatrixX<Scalar> Ainv = lu.inverse();
  const VectorX<Scalar> shift = -(Ainv * b);
  PolyTensorField<Scalar> r(m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) {
      const Poly<Scalar> s = compose_affine(t.at(i, j), Ainv, shift);
      for (Eigen::Index a = 0; a < m; ++a)
        for (Eigen::Index c = 0; c < m; ++c) {
          const Scalar w = A(a, i) * A(c, j);
          if (w == Scalar(0)) continue;
          add_into(r.at(a, c), s, w);
        }
    }
  return r;
}

template <typename Scalar>
PolyVectorField<Scalar> pushforward_affine(const PolyVectorField<Scalar>& v,
                                           const MatrixX<Scalar>& A, const VectorX<Scalar>& b) {
  const Eigen::Index m = v.dim();
  Eigen::FullPivLU<MatrixX<Scalar>> lu(A);
  if (!lu.isInvertible()) throw ChartError("chart matrix is not invertible");
  const MatrixX<Scalar> Ainv = lu.inverse();
  const VectorX<Scalar> shift = -(Ainv * b);
  PolyVectorField<Scalar> r(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Poly<Scalar> s = compose_affine(v.comp[static_cast<std::size_t>(i)], Ainv, shift);
    for (Eigen::Index a = 0; a < m; ++a) {
      if (A(a, i) == Scalar(0)) continue;
      add_into(r.comp[static_cast<std::size_t>(a)], s, A(a, i));
    }
  }
  return r;
}

// Pointwise pushforward with Jacobian J = dy/dx at x: J T(x) J^T.
template <typename Scalar>
MatrixX<Scalar> pushforward_at_point(const PolyTensorField<Scalar>& t, const MatrixX<Scalar>& J,
                                     const VectorX<Scalar>& x) {
  return J * t(x) * J.transpose();
}

// Substitute x_k = value and drop the k-th component, which must vanish on
// the hyperplane (the field has to be tangent to it).
template <typename Scalar>
PolyVectorField<Scalar> restrict_to_hyperplane(const PolyVectorField<Scalar>& v, Eigen::Index k,
                                               Scalar value, double tol = kCoefficientTol) {
  const Eigen::Index m = v.dim();
  if (k < 0 || k >= m) throw DimensionMismatchError("hyperplane index out of range");
  MatrixX<Scalar> embed = MatrixX<Scalar>::Zero(m, m - 1);
  VectorX<Scalar> offset = VectorX<Scalar>::Zero(m);
  offset(k) = value;
  for (Eigen::Index i = 0, col = 0; i < m; ++i) {
    if (i == k) continue;
    embed(i, col++) = Scalar(1);
  }
  const Poly<Scalar> normal_comp =
      compose_affine(v.comp[static_cast<std::size_t>(k)], embed, offset);
  if (max_abs_coeff(normal_comp) > tol * tolerance_scale(max_abs_coeff(v)))
    throw ChartError("field is not tangent to the requested hyperplane");
  PolyVectorField<Scalar> r(m - 1);
  for (Eigen::Index i = 0, row = 0; i < m; ++i) {
    if (i == k) continue;
    r.comp[static_cast<std::size_t>(row++)] =
        compose_affine(v.comp[static_cast<std::size_t>(i)], embed, offset);
  }
  return r;
}

template <typename Scalar>
Poly<std::complex<Scalar>> complexify(const Poly<Scalar>& p) {
  Poly<std::complex<Scalar>> r(p.dim());
  r.constant = p.constant;
  r.linear = p.linear.template cast<std::complex<Scalar>>();
  if (p.has_quadratic()) r.quadratic = p.quadratic.template cast<std::complex<Scalar>>();
  return r;
}

template <typename Scalar>
PolyTensorField<std::complex<Scalar>> complexify(const PolyTensorField<Scalar>& t) {
  PolyTensorField<std::complex<Scalar>> r(t.dim());
  for (std::size_t i = 0; i < t.comp.size(); ++i) r.comp[i] = complexify(t.comp[i]);
  return r;
}

}  // namespace stategeom
