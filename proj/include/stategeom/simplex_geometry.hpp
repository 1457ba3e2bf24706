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

#include <array>
#include <functional>
#include <string>

#include "stategeom/poly.hpp"

namespace stategeom {

// Points of the ambient space R^n are first class; simplex membership is a
// predicate, since the flows built here are free to leave the simplex.
bool in_simplex(const RealVector& p, double tol = 1e-12);

struct Chart {
  std::string name;
  std::function<RealVector(const RealVector&)> forward;
  std::function<RealVector(const RealVector&)> inverse;
  // Jacobian d(chart)/d(ambient) at an ambient point.
  std::function<RealMatrix(const RealVector&)> jacobian;
  // Affine charts (y = A p + b) additionally carry exact data so tensors can
  // be pushed forward at the coefficient level.
  bool affine = false;
  RealMatrix A;
  RealVector b;
};

/// Identity chart on the p-coordinates.
Chart p_chart();

// Cartesian chart adapted to the simplex plane:
//   x1 = (p1 - p3)/2,  x2 = (p2 - p1)/2,  x3 = p1 + p2 + p3 - 1,
// so the simplex hyperplane is the coordinate plane x3 = 0.
Chart x_chart();

/// x_j = ln(p_j) on the open octant.
Chart log_chart();

Chart inverse_chart(const Chart& chart);

// Poisson bivector on the ambient R^3 of the 3-point simplex, with
// {p1,p2} = {p2,p3} = {p3,p1} = p1 + p2 + p3 and Casimir C = p1 + p2 + p3.
// Wedge convention: a ^ b = a x b - b x a.
PolyTensorField<double> simplex_lambda();

// Symmetric companion tensor: component matrix C * (2 delta_ij - (1 - delta_ij)),
// same Casimir.  Symmetrized product convention: a x_S b = a x b + b x a.
PolyTensorField<double> simplex_g();

/// X_f = Lambda(df, .) for a polynomial f of degree <= 2 in the p-chart.
PolyVectorField<double> hamiltonian_field_simplex(const Poly<double>& f);
/// Y_f = G(df, .).
PolyVectorField<double> gradient_field_simplex(const Poly<double>& f);

/// Coefficient-exact pushforward; requires an affine chart.
PolyTensorField<double> pushforward(const PolyTensorField<double>& t, const Chart& chart);
PolyVectorField<double> pushforward(const PolyVectorField<double>& v, const Chart& chart);
/// Pointwise pushforward from the ambient point p; works for any chart.
RealMatrix pushforward_at(const PolyTensorField<double>& t, const Chart& chart,
                          const RealVector& p);

// Hamiltonian fields, in the x-chart, of the quadratic functions
//   f1 = (x1^2 + x2^2)/2,  f2 = (x1^2 - x2^2)/2,  f3 = -x1 x2,
// which close on sl(2,R) on each leaf x3 = const.  (On the degenerate leaf
// x3 = -1 all three vanish identically.)
std::array<PolyVectorField<double>, 3> quadratic_hamiltonians();

/// Hamiltonian field of the coordinate x_k (k = 0 or 1) in the x-chart.
PolyVectorField<double> coordinate_hamiltonian_x(int k);

/// {X_f1, X_f2, X_f3, X_1, X_2}: the isl(2,R) family in the x-chart.
std::array<PolyVectorField<double>, 5> isl2_family();

// Quadratic bivector {p1,p2} = p1 p2 (cyclic) with Casimir p1 p2 p3.
PolyTensorField<double> pi_tensor();
/// Hamiltonian field of the linear function a . p with respect to pi_tensor.
PolyVectorField<double> pi_hamiltonian(const Eigen::Vector3d& a);

/// Fisher-Rao metric components at an interior point, in the given chart.
RealMatrix fisher_rao(const RealVector& p, const Chart& chart);

// Covariant change of chart for metric components: given g in the ambient
// chart and J = d(chart)/d(ambient), returns components in the new chart.
RealMatrix covariant_change_of_chart(const RealMatrix& g, const RealMatrix& jacobian);

// n-dimensional generalization built from X_{jk} = d_j - d_k over consecutive
// cyclic pairs (12,23), (23,34), ..., (n1,12):
//   Lambda_n = C sum X_{j,j+1} ^ X_{j+1,j+2}
//   G_n      = C sum X_{j,j+1} x_S X_{j+1,j+2}
// For n = 3 these reduce to 3 * simplex_lambda and -1 * simplex_g.
PolyTensorField<double> general_lambda_n(int n);
PolyTensorField<double> general_g_n(int n);

}  // namespace stategeom
