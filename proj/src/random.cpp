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
#include "stategeom/random.hpp"

namespace stategeom {

RealVector random_vector(Rng& rng, Eigen::Index m, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  RealVector v(m);
  for (Eigen::Index i = 0; i < m; ++i) v(i) = dist(rng);
  return v;
}

ComplexMatrix random_complex_matrix(Rng& rng, int n, double scale) {
  std::normal_distribution<double> dist(0.0, scale);
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(dist(rng), dist(rng));
  return m;
}

ComplexMatrix random_hermitian(Rng& rng, int n, double scale) {
  return hermitize(random_complex_matrix(rng, n, scale));
}

ComplexMatrix random_traceless_hermitian(Rng& rng, int n, double scale) {
  ComplexMatrix h = random_hermitian(rng, n, scale);
  h -= (h.trace() / double(n)) * ComplexMatrix::Identity(n, n);
  return hermitize(h);
}

ComplexMatrix random_unitary(Rng& rng, int n) {
  const ComplexMatrix g = random_complex_matrix(rng, n);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  // Fix the phase of each column so the distribution is Haar-like.
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex rjj = r(j, j);
    if (std::abs(rjj) > 0.0) q.col(j) *= rjj / std::abs(rjj);
  }
  return q;
}

DensityMatrix random_density(Rng& rng, int n, int rank) {
  if (rank < 1 || rank > n) throw InvalidDimensionError("random_density: bad rank");
  std::uniform_real_distribution<double> dist(0.2, 1.0);
  RealVector eigenvalues = RealVector::Zero(n);
  double total = 0.0;
  for (int i = 0; i < rank; ++i) {
    eigenvalues(i) = dist(rng);
    total += eigenvalues(i);
  }
  eigenvalues /= total;
  const ComplexMatrix u = random_unitary(rng, n);
  ComplexMatrix rho =
      u * eigenvalues.cast<Complex>().asDiagonal() * u.adjoint();
  return make_density_matrix(hermitize(rho));
}

Poly<double> random_poly(Rng& rng, Eigen::Index m, int deg) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Poly<double> p(m);
  p.constant = deg >= 0 ? dist(rng) : 0.0;
  if (deg >= 1) p.linear = random_vector(rng, m);
  if (deg >= 2) {
    MatrixX<double> q(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = 0; j < m; ++j) q(i, j) = dist(rng);
    p.quadratic = ((q + q.transpose()) / 2.0).eval();
  }
  return p;
}

}  // namespace stategeom
