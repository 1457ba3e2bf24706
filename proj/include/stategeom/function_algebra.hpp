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

#include "stategeom/types.hpp"

namespace stategeom {

// Linear functionals f_a(p) = a . p on the ambient space of the 3-point
// simplex, real or complexified.  All products are computed through the
// tensor contractions of the simplex geometry; the closed-form tables are
// regression fixtures, not the implementation.
using RealFunctional = Eigen::Vector3d;
using ComplexFunctional = Eigen::Vector3cd;

// Distinguished basis: e1 = (p1 - p2)/sqrt(3), e2 = (p2 - p3)/sqrt(3),
// e3 = p1 + p2 + p3.
RealFunctional fn_e1();
RealFunctional fn_e2();
RealFunctional fn_e3();

double eval_functional(const RealFunctional& f, const Eigen::Vector3d& p);
Complex eval_functional(const ComplexFunctional& f, const Eigen::Vector3d& p);

/// [[f, g]] = Lambda(df, dg); on the e-basis a Heisenberg algebra.
RealFunctional lie_bracket_fn(const RealFunctional& f, const RealFunctional& g);
ComplexFunctional lie_bracket_fn(const ComplexFunctional& f, const ComplexFunctional& g);

/// f (.) g = G(df, dg); a Jordan product.
RealFunctional jordan_fn(const RealFunctional& f, const RealFunctional& g);
ComplexFunctional jordan_fn(const ComplexFunctional& f, const ComplexFunctional& g);

/// f * g = (f (.) g + i [[f, g]]) / 2 on the complexification; associative.
ComplexFunctional star_product(const ComplexFunctional& f, const ComplexFunctional& g);

// Certificate that no u satisfies u * f = f for all f: least-squares residual
// of the overdetermined linear system u * p_j = p_j, which is bounded away
// from zero because every product lands on multiples of e3.
struct NoUnitCertificate {
  bool has_unit = false;
  double min_residual = 0.0;
};

NoUnitCertificate certify_no_unit();

}  // namespace stategeom
