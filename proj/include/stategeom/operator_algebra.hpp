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

#include <vector>

#include "stategeom/types.hpp"

namespace stategeom {

bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);

// (M + M^dagger)/2; applied after arithmetic that is Hermitian by theory to
// suppress roundoff drift.
ComplexMatrix hermitize(const ComplexMatrix& m);

void require_hermitian(const ComplexMatrix& m, const char* what,
                       double tol = 100 * kHermitianTol);

/// Lie product (i/2)(ab - ba) of two Hermitian matrices; again Hermitian.
ComplexMatrix lie_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Jordan product (ab + ba)/2 of two Hermitian matrices; again Hermitian.
ComplexMatrix jordan_product(const ComplexMatrix& a, const ComplexMatrix& b);

// Trace-orthonormal Hermitian basis of an n-level system.  Element 0 is
// I/sqrt(n); then symmetric off-diagonal pairs (j < k) in lexicographic
// order, antisymmetric pairs (j < k), and finally the diagonal traceless
// elements in increasing rank.  The ordering is fixed so that
// structure-constant fixtures stay stable.
struct OperatorBasis {
  int dim = 0;
  std::vector<ComplexMatrix> elements;

  Eigen::Index size() const { return static_cast<Eigen::Index>(elements.size()); }
};

OperatorBasis gellmann_basis(int n);

RealMatrix gram_matrix(const OperatorBasis& basis);
void require_orthonormal(const OperatorBasis& basis, double tol = kDefaultTol);

// c^{mu nu}_sigma = Tr(lie(e^mu, e^nu) e^sigma)  (antisymmetric in mu, nu)
// d^{mu nu}_sigma = Tr(jordan(e^mu, e^nu) e^sigma)  (symmetric in mu, nu)
struct StructureConstants {
  int dim = 0;
  Tensor3 c;
  Tensor3 d;
};

StructureConstants structure_constants(const OperatorBasis& basis);

// Structure constants of the conjugated basis {U e^mu U^dagger}; equal to the
// original ones for any unitary U.
StructureConstants conjugated_structure_constants(const OperatorBasis& basis,
                                                  const ComplexMatrix& unitary);

// Coordinates x^mu = Tr(a e^mu) of a Hermitian operator, and back.
RealVector operator_to_coords(const OperatorBasis& basis, const ComplexMatrix& a);
ComplexMatrix coords_to_operator(const OperatorBasis& basis, const RealVector& x);

}  // namespace stategeom
