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
#include "stategeom/function_algebra.hpp"

#include <cmath>

#include "stategeom/simplex_geometry.hpp"

namespace stategeom {

namespace {

template <typename Scalar>
VectorX<Scalar> functional_product(const PolyTensorField<Scalar>& tensor,
                                   const VectorX<Scalar>& f, const VectorX<Scalar>& g) {
  const Poly<Scalar> result =
      bracket_poly(tensor, Poly<Scalar>::linear_poly(f), Poly<Scalar>::linear_poly(g));
  // Products of linear functionals under these tensors stay linear.
  return result.linear;
}

const PolyTensorField<double>& lambda_real() {
  static const PolyTensorField<double> t = simplex_lambda();
  return t;
}

const PolyTensorField<double>& g_real() {
  static const PolyTensorField<double> t = simplex_g();
  return t;
}

const PolyTensorField<Complex>& lambda_complex() {
  static const PolyTensorField<Complex> t = complexify(simplex_lambda());
  return t;
}

const PolyTensorField<Complex>& g_complex() {
  static const PolyTensorField<Complex> t = complexify(simplex_g());
  return t;
}

}  // namespace

RealFunctional fn_e1() { return RealFunctional(1.0, -1.0, 0.0) / std::sqrt(3.0); }
RealFunctional fn_e2() { return RealFunctional(0.0, 1.0, -1.0) / std::sqrt(3.0); }
RealFunctional fn_e3() { return RealFunctional(1.0, 1.0, 1.0); }

double eval_functional(const RealFunctional& f, const Eigen::Vector3d& p) { return f.dot(p); }

Complex eval_functional(const ComplexFunctional& f, const Eigen::Vector3d& p) {
  return f(0) * p(0) + f(1) * p(1) + f(2) * p(2);
}

RealFunctional lie_bracket_fn(const RealFunctional& f, const RealFunctional& g) {
  return functional_product<double>(lambda_real(), f, g);
}

ComplexFunctional lie_bracket_fn(const ComplexFunctional& f, const ComplexFunctional& g) {
  return functional_product<Complex>(lambda_complex(), f, g);
}

RealFunctional jordan_fn(const RealFunctional& f, const RealFunctional& g) {
  return functional_product<double>(g_real(), f, g);
}

ComplexFunctional jordan_fn(const ComplexFunctional& f, const ComplexFunctional& g) {
  return functional_product<Complex>(g_complex(), f, g);
}

ComplexFunctional star_product(const ComplexFunctional& f, const ComplexFunctional& g) {
  const Complex i(0.0, 1.0);
  return 0.5 * (jordan_fn(f, g) + i * lie_bracket_fn(f, g));
}

NoUnitCertificate certify_no_unit() {
  // Unknown u in C^3; equations u * p_j = p_j for the coordinate functionals
  // p_j, stacked as 9 complex equations A u = rhs.
  Eigen::Matrix<Complex, 9, 3> A = Eigen::Matrix<Complex, 9, 3>::Zero();
  Eigen::Matrix<Complex, 9, 1> rhs = Eigen::Matrix<Complex, 9, 1>::Zero();
  for (int j = 0; j < 3; ++j) {
    ComplexFunctional pj = ComplexFunctional::Zero();
    pj(j) = 1.0;
    for (int k = 0; k < 3; ++k) {
      ComplexFunctional uk = ComplexFunctional::Zero();
      uk(k) = 1.0;
      const ComplexFunctional prod = star_product(uk, pj);
      for (int row = 0; row < 3; ++row) A(3 * j + row, k) = prod(row);
    }
    for (int row = 0; row < 3; ++row) rhs(3 * j + row) = pj(row);
  }
  const Eigen::Matrix<Complex, 3, 1> u = A.colPivHouseholderQr().solve(rhs);
  const double residual = (A * u - rhs).norm();
  NoUnitCertificate cert;
  cert.min_residual = residual;
  cert.has_unit = residual < 1e-8;
  return cert;
}

}  // namespace stategeom
