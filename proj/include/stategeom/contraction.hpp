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

#include "stategeom/poly.hpp"

namespace stategeom {

// One-parameter family of quadratic Casimirs interpolating between su(2)
// (lambda = 1) and the Heisenberg-Weyl / simplex structure (lambda = 0):
//   C_lambda(x) = x1^2 + x2^2 + x3^2 + 2 (1 - lambda)(x1 x2 + x2 x3 + x3 x1).
double casimir_value(double lambda, const Eigen::Vector3d& x);
Poly<double> casimir_poly(double lambda);

// Bivector with {x_i, x_j} = (1/2) eps_{ijk} dC_lambda/dx_k.  The 1/2 makes
// lambda = 0 reproduce the simplex bivector with no extra factor and
// lambda = 1 give {x_i, x_j} = eps_{ijk} x_k.
PolyTensorField<double> bivector_from_casimir(double lambda);

struct FlatnessProfile {
  double max_deviation = 0.0;
  int excluded_points = 0;  // grid points where the level set misses the normal line
};

// Distance, along the normal of the plane x1+x2+x3 = 1, from barycentric grid
// points of the simplex to the level set C_lambda = 1 (which passes through
// the three vertices).  Monotone nonincreasing as lambda decreases to 0.
FlatnessProfile flatness_profile(double lambda, int grid);

}  // namespace stategeom
