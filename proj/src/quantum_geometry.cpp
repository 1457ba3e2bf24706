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
#include "stategeom/quantum_geometry.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace stategeom {

namespace {

void require_same_square(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                         const char* what) {
  if (a.rows() != a.cols() || a.rows() != b.rows() || b.rows() != b.cols() ||
      a.rows() != c.rows() || c.rows() != c.cols()) {
    throw DimensionMismatchError(std::string(what) + ": dimension mismatch");
  }
}

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.transpose().cwiseProduct(b).sum().real();
}

}  // namespace

QuantumGeometry make_quantum_geometry(int n) {
  QuantumGeometry geom;
  geom.basis = gellmann_basis(n);
  geom.constants = structure_constants(geom.basis);
  return geom;
}

double lambda_eval(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& xi) {
  require_same_square(a, b, xi, "lambda_eval");
  return real_trace_product(xi, lie_product(a, b));
}

double g_eval(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& xi) {
  require_same_square(a, b, xi, "g_eval");
  return real_trace_product(xi, jordan_product(a, b));
}

double r_eval(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& xi) {
  require_same_square(a, b, xi, "r_eval");
  return g_eval(a, b, xi) - real_trace_product(xi, a) * real_trace_product(xi, b);
}

PolyTensorField<double> lambda_tensor(const QuantumGeometry& geom) {
  const Eigen::Index m = geom.coord_dim();
  PolyTensorField<double> t(m);
  for (Eigen::Index mu = 0; mu < m; ++mu)
    for (Eigen::Index nu = 0; nu < m; ++nu)
      for (Eigen::Index sigma = 0; sigma < m; ++sigma)
        t.at(mu, nu).linear(sigma) = geom.constants.c(mu, nu, sigma);
  return t;
}

PolyTensorField<double> g_tensor(const QuantumGeometry& geom) {
  const Eigen::Index m = geom.coord_dim();
  PolyTensorField<double> t(m);
  for (Eigen::Index mu = 0; mu < m; ++mu)
    for (Eigen::Index nu = 0; nu < m; ++nu)
      for (Eigen::Index sigma = 0; sigma < m; ++sigma)
        t.at(mu, nu).linear(sigma) = geom.constants.d(mu, nu, sigma);
  return t;
}

PolyTensorField<double> r_tensor(const QuantumGeometry& geom) {
  const Eigen::Index m = geom.coord_dim();
  PolyTensorField<double> t = g_tensor(geom);
  for (Eigen::Index mu = 0; mu < m; ++mu) {
    for (Eigen::Index nu = 0; nu < m; ++nu) {
      Poly<double>& p = t.at(mu, nu);
      p.ensure_quadratic();
      p.quadratic(mu, nu) -= 0.5;
      p.quadratic(nu, mu) -= 0.5;
    }
  }
  return t;
}

PolyVectorField<double> hamiltonian_field(const QuantumGeometry& geom, const ComplexMatrix& a) {
  require_hermitian(a, "hamiltonian_field");
  const Eigen::Index m = geom.coord_dim();
  const RealVector coeff = operator_to_coords(geom.basis, a);
  PolyVectorField<double> x(m);
  for (Eigen::Index nu = 0; nu < m; ++nu) {
    RealVector lin = RealVector::Zero(m);
    for (Eigen::Index mu = 0; mu < m; ++mu) {
      if (coeff(mu) == 0.0) continue;
      for (Eigen::Index sigma = 0; sigma < m; ++sigma)
        lin(sigma) += coeff(mu) * geom.constants.c(mu, nu, sigma);
    }
    x.comp[static_cast<std::size_t>(nu)].linear = lin;
  }
  return x;
}

PolyVectorField<double> gradient_field(const QuantumGeometry& geom, const ComplexMatrix& b) {
  require_hermitian(b, "gradient_field");
  const Eigen::Index m = geom.coord_dim();
  const RealVector coeff = operator_to_coords(geom.basis, b);
  PolyVectorField<double> y(m);
  for (Eigen::Index nu = 0; nu < m; ++nu) {
    RealVector lin = RealVector::Zero(m);
    for (Eigen::Index mu = 0; mu < m; ++mu) {
      if (coeff(mu) == 0.0) continue;
      for (Eigen::Index sigma = 0; sigma < m; ++sigma)
        lin(sigma) += coeff(mu) * geom.constants.d(mu, nu, sigma);
    }
    y.comp[static_cast<std::size_t>(nu)].linear = lin;
  }
  return y;
}

PolyVectorField<double> r_gradient_field(const QuantumGeometry& geom, const ComplexMatrix& b) {
  PolyVectorField<double> y = gradient_field(geom, b);
  const Eigen::Index m = geom.coord_dim();
  const RealVector coeff = operator_to_coords(geom.basis, b);
  // Component nu picks up -f_b(x) x^nu.
  for (Eigen::Index nu = 0; nu < m; ++nu) {
    Poly<double>& p = y.comp[static_cast<std::size_t>(nu)];
    p.ensure_quadratic();
    for (Eigen::Index mu = 0; mu < m; ++mu) {
      if (coeff(mu) == 0.0) continue;
      p.quadratic(mu, nu) -= 0.5 * coeff(mu);
      p.quadratic(nu, mu) -= 0.5 * coeff(mu);
    }
  }
  return y;
}

DensityMatrix make_density_matrix(const ComplexMatrix& rho, double tol) {
  if (rho.rows() != rho.cols()) {
    throw DimensionMismatchError("make_density_matrix: matrix must be square");
  }
  require_hermitian(rho, "make_density_matrix");
  const ComplexMatrix sym = hermitize(rho);
  if (std::abs(sym.trace().real() - 1.0) > tol) {
    throw InvalidBasisError("make_density_matrix: trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol) {
    throw InvalidBasisError("make_density_matrix: matrix is not positive semidefinite");
  }
  DensityMatrix d;
  d.dim = static_cast<int>(rho.rows());
  d.rho = sym;
  return d;
}

ComplexMatrix dual_point_flow(const ComplexMatrix& a, const ComplexMatrix& b,
                              const ComplexMatrix& xi, double t, bool normalize) {
  require_same_square(a, b, xi, "dual_point_flow");
  require_hermitian(a, "dual_point_flow(a)");
  require_hermitian(b, "dual_point_flow(b)");
  const Complex i(0.0, 1.0);
  const ComplexMatrix generator = (i * kLieFlowScale) * a + kJordanFlowScale * b;
  const ComplexMatrix g = (t * generator).exp();
  ComplexMatrix moved = hermitize(g * xi * g.adjoint());
  if (!normalize) return moved;
  const double denom = moved.trace().real();
  if (std::abs(denom) <= 1e-14) {
    throw DegenerateFlowError("dual_point_flow: normalization denominator vanished");
  }
  return moved / denom;
}

DensityMatrix closed_form_flow(const ComplexMatrix& a, const ComplexMatrix& b,
                               const DensityMatrix& rho, double t) {
  const ComplexMatrix moved = dual_point_flow(a, b, rho.rho, t, /*normalize=*/true);
  DensityMatrix out;
  out.dim = rho.dim;
  out.rho = moved;
  return out;
}

RankResult rank_of_state(const DensityMatrix& rho, double tol) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.rho, Eigen::EigenvaluesOnly);
  const RealVector ev = es.eigenvalues();
  const double top = ev.maxCoeff();
  RankResult result;
  if (top <= 0.0) return result;
  const double cutoff = tol * top;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > cutoff) ++result.rank;
    if (ev(i) > cutoff / 100.0 && ev(i) < cutoff * 100.0) result.near_tolerance = true;
  }
  return result;
}

}  // namespace stategeom
