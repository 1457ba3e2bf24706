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

#include "stategeom/operator_algebra.hpp"
#include "stategeom/poly.hpp"

namespace stategeom {

/// Basis plus structure constants of an n-level system, the context every
/// coordinate-level construction on the dual space needs.
struct QuantumGeometry {
  OperatorBasis basis;
  StructureConstants constants;

  int dim() const { return basis.dim; }
  Eigen::Index coord_dim() const { return basis.size(); }
};

QuantumGeometry make_quantum_geometry(int n);

// Pairings of the three contravariant tensors on linear functions f_a, f_b at
// the dual point with operator representative xi:
//   Lambda(df_a, df_b)(xi) = Tr(xi lie(a, b))
//   G(df_a, df_b)(xi)      = Tr(xi jordan(a, b))
//   R(df_a, df_b)(xi)      = G(...) - Tr(xi a) Tr(xi b)
// R(df_a, df_a) at a state is the variance of a.
double lambda_eval(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& xi);
double g_eval(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& xi);
double r_eval(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& xi);

// Coordinate tensors on R^{n^2}:  Lambda^{mu nu} = c^{mu nu}_sigma x^sigma
// (the sum over basis bivectors is restricted to mu < nu, which together with
// the wedge convention a^b = a x b - b x a reproduces the pairing above
// without a factor 2), G^{mu nu} = d^{mu nu}_sigma x^sigma, and
// R^{mu nu} = G^{mu nu} - x^mu x^nu.
PolyTensorField<double> lambda_tensor(const QuantumGeometry& geom);
PolyTensorField<double> g_tensor(const QuantumGeometry& geom);
PolyTensorField<double> r_tensor(const QuantumGeometry& geom);

/// X_a = Lambda(df_a, .), linear in x.
PolyVectorField<double> hamiltonian_field(const QuantumGeometry& geom, const ComplexMatrix& a);
/// Y_b = G(df_b, .), linear in x; not tangent to the trace-one hyperplane.
PolyVectorField<double> gradient_field(const QuantumGeometry& geom, const ComplexMatrix& b);
/// The deformed gradient field R(df_b, .), quadratic in x and tangent to the
/// hyperplane x^0 = 1/sqrt(n).
PolyVectorField<double> r_gradient_field(const QuantumGeometry& geom, const ComplexMatrix& b);

struct DensityMatrix {
  int dim = 0;
  ComplexMatrix rho;
};

/// Validates positive semidefiniteness (eigenvalues >= -1e-10) and unit trace.
DensityMatrix make_density_matrix(const ComplexMatrix& rho, double tol = kDefaultTol);

// closed_form_flow(a, b, rho, t) is the integral curve of the vector field
// X_a + Y~_b (Hamiltonian plus deformed gradient) through rho:
//
//   rho_t = g_t rho g_t^dagger / Tr(g_t rho g_t^dagger),
//   g_t   = exp((i * kLieFlowScale * a + kJordanFlowScale * b) t).
//
// The scale factors absorb the factor-1/2 and sign difference between the
// tensor-level products (i[.,.]/2, {.,.}/2) and the group conjugation; they
// are pinned by the t=0 derivative test against the coordinate fields.
inline constexpr double kLieFlowScale = -0.5;
inline constexpr double kJordanFlowScale = 0.5;

DensityMatrix closed_form_flow(const ComplexMatrix& a, const ComplexMatrix& b,
                               const DensityMatrix& rho, double t);

// Same conjugation applied to an arbitrary Hermitian dual point.  With
// normalize = true the trace denominator may legitimately vanish for
// indefinite points (the gradient-like fields are not complete off the state
// space); that raises DegenerateFlowError rather than returning garbage.
ComplexMatrix dual_point_flow(const ComplexMatrix& a, const ComplexMatrix& b,
                              const ComplexMatrix& xi, double t, bool normalize);

struct RankResult {
  int rank = 0;
  // Set when some eigenvalue falls within a factor 100 of the cutoff, i.e.
  // the rank call is sensitive to the tolerance.
  bool near_tolerance = false;
};

/// Number of eigenvalues above tol * (largest eigenvalue).
RankResult rank_of_state(const DensityMatrix& rho, double tol = 1e-8);

}  // namespace stategeom
