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
#include "stategeom/contraction.hpp"

#include <cmath>

namespace stategeom {

Poly<double> casimir_poly(double lambda) {
  RealMatrix q(3, 3);
  const double off = 1.0 - lambda;
  q << 1.0, off, off,  //
      off, 1.0, off,   //
      off, off, 1.0;
  return Poly<double>::quadratic_poly(q);
}

double casimir_value(double lambda, const Eigen::Vector3d& x) {
  RealVector xv(3);
  xv << x(0), x(1), x(2);
  return eval(casimir_poly(lambda), xv);
}

PolyTensorField<double> bivector_from_casimir(double lambda) {
  const Poly<double> casimir = casimir_poly(lambda);
  PolyTensorField<double> t(3);
  const int eps[3][3][3] = {{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
                            {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
                            {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}};
  for (Eigen::Index i = 0; i < 3; ++i) {
    for (Eigen::Index j = 0; j < 3; ++j) {
      Poly<double> comp(3);
      for (Eigen::Index k = 0; k < 3; ++k) {
        const int sign = eps[i][j][k];
        if (sign == 0) continue;
        add_into(comp, partial(casimir, k), 0.5 * double(sign));
      }
      t.at(i, j) = comp;
    }
  }
  return t;
}

FlatnessProfile flatness_profile(double lambda, int grid) {
  if (grid < 2) throw InvalidDimensionError("flatness_profile: grid must be >= 2");
  const Poly<double> casimir = casimir_poly(lambda);
  const RealVector normal = RealVector::Ones(3) / std::sqrt(3.0);

  FlatnessProfile profile;
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j + i <= grid; ++j) {
      RealVector p(3);
      p << double(i) / grid, double(j) / grid, double(grid - i - j) / grid;
      // C_lambda(p + s n) = 1 is quadratic in s.
      const double a = dot_bilinear<double>(normal, casimir.quadratic * normal);
      const double b = dot_bilinear<double>(gradient(casimir, p), normal);
      const double c = eval(casimir, p) - 1.0;
      const double disc = b * b - 4.0 * a * c;
      if (disc < 0.0) {
        ++profile.excluded_points;
        continue;
      }
      const double root = std::sqrt(disc);
      // Root of smaller magnitude = nearest crossing of the level set.
      const double s1 = (-b + root) / (2.0 * a);
      const double s2 = (-b - root) / (2.0 * a);
      const double s = std::abs(s1) <= std::abs(s2) ? s1 : s2;
      profile.max_deviation = std::max(profile.max_deviation, std::abs(s));
    }
  }
  return profile;
}

}  // namespace stategeom
