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
#include "stategeom/stochastic.hpp"

#include <cmath>

#include "stategeom/flow.hpp"
#include "stategeom/simplex_geometry.hpp"

namespace stategeom {

MatrixClassification classify(const Eigen::Matrix3d& A, double tol) {
  MatrixClassification c;
  const Eigen::RowVector3d col_sums = Eigen::RowVector3d::Ones() * A;
  c.pseudo_stochastic = (col_sums - Eigen::RowVector3d::Ones()).cwiseAbs().maxCoeff() <= tol;
  c.stochastic = c.pseudo_stochastic && A.minCoeff() >= -1e-12;
  const Eigen::Vector3d row_sums = A * Eigen::Vector3d::Ones();
  c.bistochastic =
      c.stochastic && (row_sums - Eigen::Vector3d::Ones()).cwiseAbs().maxCoeff() <= tol;
  c.determinant = A.determinant();
  c.invertible = std::abs(c.determinant) > tol;
  c.unit_determinant = std::abs(c.determinant - 1.0) <= tol;
  return c;
}

Eigen::Matrix3d isl2_exponential(const PolyVectorField<double>& generator_x_chart, double t) {
  if (generator_x_chart.dim() != 3) {
    throw DimensionMismatchError("isl2_exponential: generator must live on R^3");
  }
  // The generator must be affine on the leaf x3 = 0 (and tangent to it).
  const PolyVectorField<double> on_leaf = restrict_to_hyperplane(generator_x_chart, 2, 0.0);
  for (const auto& comp : on_leaf.comp) {
    if (degree(comp, kCoefficientTol) > 1) {
      throw NotAffineError("isl2_exponential: generator is not affine on the leaf");
    }
  }

  const Chart chart = x_chart();
  const int steps = std::max(1000, static_cast<int>(std::ceil(std::abs(t))) * 1000);
  Eigen::Matrix3d result;
  for (int j = 0; j < 3; ++j) {
    RealVector vertex = RealVector::Zero(3);
    vertex(j) = 1.0;
    const RealVector x0 = chart.forward(vertex);
    if (t == 0.0) {
      result.col(j) = vertex;
      continue;
    }
    const Trajectory traj = integrate(generator_x_chart, x0, t, steps);
    result.col(j) = chart.inverse(traj.points.back());
  }
  return result;
}

std::optional<Eigen::Vector3d> positivity_escape_witness(const Eigen::Matrix3d& A, double tol) {
  const MatrixClassification c = classify(A);
  if (!c.pseudo_stochastic) {
    throw NotAffineError("positivity_escape_witness: matrix is not pseudo-stochastic");
  }
  int worst_col = -1;
  double worst = -tol;
  for (int j = 0; j < 3; ++j) {
    const double m = A.col(j).minCoeff();
    if (m < worst) {
      worst = m;
      worst_col = j;
    }
  }
  if (worst_col < 0) return std::nullopt;
  Eigen::Vector3d vertex = Eigen::Vector3d::Zero();
  vertex(worst_col) = 1.0;
  return vertex;
}

InverseProbe bistochastic_inverse_probe(const Eigen::Matrix3d& B, double tol) {
  const MatrixClassification c = classify(B, tol);
  if (!c.bistochastic) {
    throw NotAffineError("bistochastic_inverse_probe: matrix is not bistochastic");
  }
  if (!c.invertible) {
    throw SingularMatrixError("bistochastic_inverse_probe: matrix is singular");
  }
  InverseProbe probe;
  probe.inverse = B.inverse();
  probe.min_inverse_entry = probe.inverse.minCoeff();
  probe.inverse_bistochastic = classify(probe.inverse, tol).bistochastic;
  return probe;
}

int pseudo_stochastic_tangent_dimension() {
  // Three column-sum constraints on the 9 matrix entries.
  RealMatrix constraints = RealMatrix::Zero(3, 9);
  for (int col = 0; col < 3; ++col)
    for (int row = 0; row < 3; ++row) constraints(col, 3 * col + row) = 1.0;
  Eigen::FullPivLU<RealMatrix> lu(constraints);
  return static_cast<int>(9 - lu.rank());
}

}  // namespace stategeom
