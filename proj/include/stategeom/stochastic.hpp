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

#include <optional>

#include "stategeom/poly.hpp"

namespace stategeom {

// Row/column convention: matrices act on probability column vectors, and the
// defining condition is (1,1,1) A = (1,1,1), i.e. UNIT COLUMN SUMS.  Much of
// the stochastic-matrix literature uses the transpose convention; everything
// in this module uses column sums.
struct MatrixClassification {
  bool pseudo_stochastic = false;  // columns sum to 1
  bool stochastic = false;         // pseudo-stochastic with nonnegative entries
  bool bistochastic = false;       // stochastic with unit row sums as well
  bool invertible = false;
  bool unit_determinant = false;
  double determinant = 0.0;
};

MatrixClassification classify(const Eigen::Matrix3d& A, double tol = kDefaultTol);

// Time-t flow of an affine generator from the isl(2,R) family (given in the
// x-chart), expressed as a 3x3 matrix acting on p-coordinates.  The matrix is
// extracted from a 3-point frame: the flowed images of the simplex vertices
// become its columns, which makes it pseudo-stochastic by construction.
Eigen::Matrix3d isl2_exponential(const PolyVectorField<double>& generator_x_chart, double t);

// A simplex point mapped to a vector with a negative entry by A, when one
// exists.  The minimum of each linear coordinate over the simplex is attained
// at a vertex, so scanning the three vertices (= columns) is exhaustive.
std::optional<Eigen::Vector3d> positivity_escape_witness(const Eigen::Matrix3d& A,
                                                         double tol = 1e-12);

struct InverseProbe {
  Eigen::Matrix3d inverse;
  bool inverse_bistochastic = false;
  double min_inverse_entry = 0.0;
};

/// Inverts a bistochastic matrix and reports whether the inverse is again
/// bistochastic (true only for permutation matrices).
InverseProbe bistochastic_inverse_probe(const Eigen::Matrix3d& B, double tol = kDefaultTol);

/// Dimension of the space of matrices with zero column sums, computed from
/// the rank of the constraint system (equals 6, the group dimension).
int pseudo_stochastic_tangent_dimension();

}  // namespace stategeom
