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

#include <random>

#include "stategeom/poly.hpp"
#include "stategeom/quantum_geometry.hpp"

namespace stategeom {

// Deterministic sampling used by the invariant suites and tests; every suite
// passes an explicit seed so outputs stay bit-stable across runs.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

RealVector random_vector(Rng& rng, Eigen::Index m, double lo = -1.0, double hi = 1.0);
ComplexMatrix random_complex_matrix(Rng& rng, int n, double scale = 1.0);
ComplexMatrix random_hermitian(Rng& rng, int n, double scale = 1.0);
ComplexMatrix random_traceless_hermitian(Rng& rng, int n, double scale = 1.0);
/// Haar-like unitary from the QR decomposition of a Gaussian complex matrix.
ComplexMatrix random_unitary(Rng& rng, int n);
DensityMatrix random_density(Rng& rng, int n, int rank);
Poly<double> random_poly(Rng& rng, Eigen::Index m, int deg);

}  // namespace stategeom
