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
#include "stategeom/operator_algebra.hpp"

#include <cmath>
#include <string>

namespace stategeom {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw DimensionMismatchError(std::string(what) + ": operands must be square of equal size");
  }
}

// Tr(A B) without forming the product.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.transpose().cwiseProduct(b).sum();
}

}  // namespace

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = tolerance_scale(m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

ComplexMatrix hermitize(const ComplexMatrix& m) { return (m + m.adjoint()) / 2.0; }

void require_hermitian(const ComplexMatrix& m, const char* what, double tol) {
  if (!is_hermitian(m, tol)) {
    throw NonHermitianError(std::string(what) + ": matrix is not Hermitian");
  }
}

ComplexMatrix lie_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "lie_product");
  const Complex half_i(0.0, 0.5);
  return hermitize(half_i * (a * b - b * a));
}

ComplexMatrix jordan_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "jordan_product");
  return hermitize(0.5 * (a * b + b * a));
}

OperatorBasis gellmann_basis(int n) {
  if (n < 2) throw InvalidDimensionError("gellmann_basis: dimension must be at least 2");
  OperatorBasis basis;
  basis.dim = n;
  basis.elements.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));

  basis.elements.push_back(ComplexMatrix::Identity(n, n) / std::sqrt(double(n)));

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(n, n);
      m(j, k) = inv_sqrt2;
      m(k, j) = inv_sqrt2;
      basis.elements.push_back(m);
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(n, n);
      m(j, k) = Complex(0.0, -inv_sqrt2);
      m(k, j) = Complex(0.0, inv_sqrt2);
      basis.elements.push_back(m);
    }
  }
  for (int l = 1; l < n; ++l) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    const double norm = 1.0 / std::sqrt(double(l) * double(l + 1));
    for (int k = 0; k < l; ++k) m(k, k) = norm;
    m(l, l) = -double(l) * norm;
    basis.elements.push_back(m);
  }
  return basis;
}

RealMatrix gram_matrix(const OperatorBasis& basis) {
  const Eigen::Index m = basis.size();
  RealMatrix g(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      g(i, j) = trace_product(basis.elements[static_cast<std::size_t>(i)],
                              basis.elements[static_cast<std::size_t>(j)])
                    .real();
  return g;
}

void require_orthonormal(const OperatorBasis& basis, double tol) {
  const Eigen::Index m = basis.size();
  if (basis.dim < 2 || m != Eigen::Index(basis.dim) * basis.dim) {
    throw InvalidBasisError("operator basis has the wrong number of elements");
  }
  const RealMatrix g = gram_matrix(basis);
  if ((g - RealMatrix::Identity(m, m)).cwiseAbs().maxCoeff() > tol) {
    throw InvalidBasisError("operator basis is not trace-orthonormal");
  }
}

StructureConstants structure_constants(const OperatorBasis& basis) {
  require_orthonormal(basis);
  const Eigen::Index m = basis.size();
  StructureConstants sc;
  sc.dim = basis.dim;
  sc.c = Tensor3(m);
  sc.d = Tensor3(m);
  for (Eigen::Index mu = 0; mu < m; ++mu) {
    for (Eigen::Index nu = 0; nu < m; ++nu) {
      const ComplexMatrix lie =
          lie_product(basis.elements[static_cast<std::size_t>(mu)],
                      basis.elements[static_cast<std::size_t>(nu)]);
      const ComplexMatrix jor =
          jordan_product(basis.elements[static_cast<std::size_t>(mu)],
                         basis.elements[static_cast<std::size_t>(nu)]);
      for (Eigen::Index sigma = 0; sigma < m; ++sigma) {
        const auto& e = basis.elements[static_cast<std::size_t>(sigma)];
        sc.c(mu, nu, sigma) = trace_product(lie, e).real();
        sc.d(mu, nu, sigma) = trace_product(jor, e).real();
      }
    }
  }
  return sc;
}

StructureConstants conjugated_structure_constants(const OperatorBasis& basis,
                                                  const ComplexMatrix& unitary) {
  if (unitary.rows() != basis.dim || unitary.cols() != basis.dim) {
    throw DimensionMismatchError("conjugated_structure_constants: unitary has wrong size");
  }
  const ComplexMatrix defect =
      unitary * unitary.adjoint() - ComplexMatrix::Identity(basis.dim, basis.dim);
  if (defect.cwiseAbs().maxCoeff() > kDefaultTol) {
    throw NonUnitaryError("conjugated_structure_constants: matrix is not unitary");
  }
  OperatorBasis rotated;
  rotated.dim = basis.dim;
  rotated.elements.reserve(basis.elements.size());
  for (const auto& e : basis.elements) {
    rotated.elements.push_back(hermitize(unitary * e * unitary.adjoint()));
  }
  return structure_constants(rotated);
}

RealVector operator_to_coords(const OperatorBasis& basis, const ComplexMatrix& a) {
  if (a.rows() != basis.dim || a.cols() != basis.dim) {
    throw DimensionMismatchError("operator_to_coords: operator has wrong size");
  }
  const Eigen::Index m = basis.size();
  RealVector x(m);
  for (Eigen::Index mu = 0; mu < m; ++mu) {
    x(mu) = trace_product(a, basis.elements[static_cast<std::size_t>(mu)]).real();
  }
  return x;
}

ComplexMatrix coords_to_operator(const OperatorBasis& basis, const RealVector& x) {
  if (x.size() != basis.size()) {
    throw DimensionMismatchError("coords_to_operator: coordinate vector has wrong size");
  }
  ComplexMatrix a = ComplexMatrix::Zero(basis.dim, basis.dim);
  for (Eigen::Index mu = 0; mu < basis.size(); ++mu) {
    a += x(mu) * basis.elements[static_cast<std::size_t>(mu)];
  }
  return a;
}

}  // namespace stategeom
