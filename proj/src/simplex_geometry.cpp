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
#include "stategeom/simplex_geometry.hpp"

#include <cmath>

namespace stategeom {

namespace {

RealVector ones(Eigen::Index n) { return RealVector::Ones(n); }

void require_positive(const RealVector& p, const char* what) {
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) <= 0.0) throw BoundaryError(std::string(what) + ": point touches the boundary");
  }
}

}  // namespace

bool in_simplex(const RealVector& p, double tol) {
  if (p.size() == 0) return false;
  if (p.minCoeff() < -tol) return false;
  return std::abs(p.sum() - 1.0) <= tol;
}

Chart p_chart() {
  Chart chart;
  chart.name = "p-chart";
  chart.forward = [](const RealVector& p) { return p; };
  chart.inverse = [](const RealVector& p) { return p; };
  chart.jacobian = [](const RealVector& p) {
    return RealMatrix::Identity(p.size(), p.size()).eval();
  };
  chart.affine = true;
  chart.A = RealMatrix::Identity(3, 3);
  chart.b = RealVector::Zero(3);
  return chart;
}

Chart x_chart() {
  Chart chart;
  chart.name = "x-chart";
  RealMatrix A(3, 3);
  A << 0.5, 0.0, -0.5,  //
      -0.5, 0.5, 0.0,   //
      1.0, 1.0, 1.0;
  RealVector b(3);
  b << 0.0, 0.0, -1.0;
  const RealMatrix Ainv = A.inverse();
  chart.affine = true;
  chart.A = A;
  chart.b = b;
  chart.forward = [A, b](const RealVector& p) { return (A * p + b).eval(); };
  chart.inverse = [Ainv, b](const RealVector& x) { return (Ainv * (x - b)).eval(); };
  chart.jacobian = [A](const RealVector&) { return A; };
  return chart;
}

Chart log_chart() {
  Chart chart;
  chart.name = "log-chart";
  chart.forward = [](const RealVector& p) {
    require_positive(p, "log_chart");
    return p.array().log().matrix().eval();
  };
  chart.inverse = [](const RealVector& x) { return x.array().exp().matrix().eval(); };
  chart.jacobian = [](const RealVector& p) {
    require_positive(p, "log_chart");
    return RealMatrix(p.array().inverse().matrix().asDiagonal());
  };
  return chart;
}

Chart inverse_chart(const Chart& chart) {
  if (!chart.affine) throw ChartError("inverse_chart: only affine charts are invertible exactly");
  Chart inv;
  inv.name = chart.name + "-inverse";
  inv.affine = true;
  inv.A = chart.A.inverse();
  inv.b = -(inv.A * chart.b);
  const RealMatrix A = inv.A;
  const RealVector b = inv.b;
  const RealMatrix Afwd = chart.A;
  const RealVector bfwd = chart.b;
  inv.forward = [A, b](const RealVector& x) { return (A * x + b).eval(); };
  inv.inverse = [Afwd, bfwd](const RealVector& p) { return (Afwd * p + bfwd).eval(); };
  inv.jacobian = [A](const RealVector&) { return A; };
  return inv;
}

PolyTensorField<double> simplex_lambda() {
  PolyTensorField<double> t(3);
  // Antisymmetric pattern of d1^d2 + d2^d3 + d3^d1.
  const int pattern[3][3] = {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j)
      if (pattern[i][j] != 0) t.at(i, j).linear = double(pattern[i][j]) * ones(3);
  return t;
}

PolyTensorField<double> simplex_g() {
  PolyTensorField<double> t(3);
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j)
      t.at(i, j).linear = (i == j ? 2.0 : -1.0) * ones(3);
  return t;
}

PolyVectorField<double> hamiltonian_field_simplex(const Poly<double>& f) {
  return contract_df(simplex_lambda(), f);
}

PolyVectorField<double> gradient_field_simplex(const Poly<double>& f) {
  return contract_df(simplex_g(), f);
}

PolyTensorField<double> pushforward(const PolyTensorField<double>& t, const Chart& chart) {
  if (!chart.affine) {
    throw ChartError("pushforward: coefficient-level pushforward needs an affine chart; "
                     "use pushforward_at for " +
                     chart.name);
  }
  return pushforward_affine(t, RealMatrix(chart.A), RealVector(chart.b));
}

PolyVectorField<double> pushforward(const PolyVectorField<double>& v, const Chart& chart) {
  if (!chart.affine) {
    throw ChartError("pushforward: coefficient-level pushforward needs an affine chart");
  }
  return pushforward_affine(v, RealMatrix(chart.A), RealVector(chart.b));
}

RealMatrix pushforward_at(const PolyTensorField<double>& t, const Chart& chart,
                          const RealVector& p) {
  const RealMatrix jac = chart.jacobian(p);
  return pushforward_at_point(t, jac, p);
}

std::array<PolyVectorField<double>, 3> quadratic_hamiltonians() {
  const PolyTensorField<double> lambda_x = pushforward(simplex_lambda(), x_chart());
  RealMatrix q1(3, 3), q2(3, 3), q3(3, 3);
  q1 << 0.5, 0, 0, 0, 0.5, 0, 0, 0, 0;
  q2 << 0.5, 0, 0, 0, -0.5, 0, 0, 0, 0;
  q3 << 0, -0.5, 0, -0.5, 0, 0, 0, 0, 0;
  return {contract_df(lambda_x, Poly<double>::quadratic_poly(q1)),
          contract_df(lambda_x, Poly<double>::quadratic_poly(q2)),
          contract_df(lambda_x, Poly<double>::quadratic_poly(q3))};
}

PolyVectorField<double> coordinate_hamiltonian_x(int k) {
  if (k < 0 || k > 1) throw InvalidDimensionError("coordinate_hamiltonian_x: k must be 0 or 1");
  const PolyTensorField<double> lambda_x = pushforward(simplex_lambda(), x_chart());
  return contract_df(lambda_x, Poly<double>::coordinate(3, k));
}

std::array<PolyVectorField<double>, 5> isl2_family() {
  auto quad = quadratic_hamiltonians();
  return {quad[0], quad[1], quad[2], coordinate_hamiltonian_x(0), coordinate_hamiltonian_x(1)};
}

PolyTensorField<double> pi_tensor() {
  PolyTensorField<double> t(3);
  // {p1,p2} = p1 p2, {p2,p3} = p2 p3, {p3,p1} = p3 p1.
  const Eigen::Index pairs[3][2] = {{0, 1}, {1, 2}, {2, 0}};
  for (const auto& pr : pairs) {
    const Eigen::Index i = pr[0], j = pr[1];
    MatrixX<double> q = MatrixX<double>::Zero(3, 3);
    q(i, j) = 0.5;
    q(j, i) = 0.5;
    t.at(i, j).quadratic = q;
    t.at(j, i).quadratic = -q;
  }
  return t;
}

PolyVectorField<double> pi_hamiltonian(const Eigen::Vector3d& a) {
  RealVector av(3);
  av << a(0), a(1), a(2);
  return contract_df(pi_tensor(), Poly<double>::linear_poly(av));
}

RealMatrix fisher_rao(const RealVector& p, const Chart& chart) {
  require_positive(p, "fisher_rao");
  if (chart.name == "p-chart") {
    return RealMatrix(p.array().inverse().matrix().asDiagonal());
  }
  if (chart.name == "log-chart") {
    // g = sum_j exp(x_j) dx_j x dx_j evaluated at x = log(p).
    const RealVector x = chart.forward(p);
    return RealMatrix(x.array().exp().matrix().asDiagonal());
  }
  const RealMatrix g = RealMatrix(p.array().inverse().matrix().asDiagonal());
  return covariant_change_of_chart(g, chart.jacobian(p));
}

RealMatrix covariant_change_of_chart(const RealMatrix& g, const RealMatrix& jacobian) {
  Eigen::FullPivLU<RealMatrix> lu(jacobian);
  if (!lu.isInvertible()) throw ChartError("covariant_change_of_chart: singular Jacobian");
  const RealMatrix jinv = lu.inverse();
  return jinv.transpose() * g * jinv;
}

namespace {

// Consecutive cyclic difference directions X_{j,j+1} = d_j - d_{j+1}.
std::vector<RealVector> cyclic_differences(int n) {
  std::vector<RealVector> u;
  u.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    RealVector v = RealVector::Zero(n);
    v(j) = 1.0;
    v((j + 1) % n) = -1.0;
    u.push_back(v);
  }
  return u;
}

PolyTensorField<double> casimir_times_pattern(int n, const RealMatrix& pattern) {
  PolyTensorField<double> t(n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (pattern(i, j) != 0.0) t.at(i, j).linear = pattern(i, j) * ones(n);
  return t;
}

}  // namespace

PolyTensorField<double> general_lambda_n(int n) {
  if (n < 3) throw InvalidDimensionError("general_lambda_n: n must be at least 3");
  const auto u = cyclic_differences(n);
  RealMatrix pattern = RealMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const RealVector& a = u[static_cast<std::size_t>(j)];
    const RealVector& b = u[static_cast<std::size_t>((j + 1) % n)];
    pattern += a * b.transpose() - b * a.transpose();
  }
  return casimir_times_pattern(n, pattern);
}

PolyTensorField<double> general_g_n(int n) {
  if (n < 3) throw InvalidDimensionError("general_g_n: n must be at least 3");
  const auto u = cyclic_differences(n);
  RealMatrix pattern = RealMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const RealVector& a = u[static_cast<std::size_t>(j)];
    const RealVector& b = u[static_cast<std::size_t>((j + 1) % n)];
    pattern += a * b.transpose() + b * a.transpose();
  }
  return casimir_times_pattern(n, pattern);
}

}  // namespace stategeom
