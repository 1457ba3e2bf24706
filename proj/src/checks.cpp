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
#include "stategeom/checks.hpp"

#include <cmath>
#include <functional>

#include "stategeom/contraction.hpp"
#include "stategeom/flow.hpp"
#include "stategeom/function_algebra.hpp"
#include "stategeom/quantum_geometry.hpp"
#include "stategeom/random.hpp"
#include "stategeom/simplex_geometry.hpp"
#include "stategeom/stochastic.hpp"

namespace stategeom {

namespace {

void add_check(std::vector<CheckResult>& out, const std::string& name, double residual,
               double tolerance) {
  out.push_back({name, residual, tolerance, residual <= tolerance});
}

void add_witness(std::vector<CheckResult>& out, const std::string& name, double value,
                 double threshold) {
  out.push_back({name, value, threshold, value > threshold});
}

double rel_defect(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  const double scale = tolerance_scale(
      std::max(lhs.cwiseAbs().maxCoeff(), rhs.cwiseAbs().maxCoeff()));
  return (lhs - rhs).cwiseAbs().maxCoeff() / scale;
}

Poly<double> casimir_linear(Eigen::Index m) {
  return Poly<double>::linear_poly(RealVector::Ones(m));
}

// Jacobi defect of the bracket of T at x: cyclic sum of {f,{g,h}}(x).
double jacobi_defect(const PolyTensorField<double>& t, const Poly<double>& f,
                     const Poly<double>& g, const Poly<double>& h, const RealVector& x) {
  const auto term = [&](const Poly<double>& u, const Poly<double>& v, const Poly<double>& w) {
    const RealVector grad_vw = bracket_gradient(t, v, w, x);
    return dot_bilinear<double>(gradient(u, x), t(x) * grad_vw);
  };
  return std::abs(term(f, g, h) + term(g, h, f) + term(h, f, g));
}

double max_jacobi_over_samples(const PolyTensorField<double>& t, Rng& rng, int triples,
                               int poly_degree = 2) {
  const Eigen::Index m = t.dim();
  double worst = 0.0;
  for (int s = 0; s < triples; ++s) {
    const Poly<double> f = random_poly(rng, m, poly_degree);
    const Poly<double> g = random_poly(rng, m, poly_degree);
    const Poly<double> h = random_poly(rng, m, poly_degree);
    const RealVector x = random_vector(rng, m);
    worst = std::max(worst, jacobi_defect(t, f, g, h, x));
  }
  return worst;
}

}  // namespace

// ---------------------------------------------------------------------------
// quantum
// ---------------------------------------------------------------------------

std::vector<CheckResult> run_quantum_checks(const CheckOptions& options) {
  std::vector<CheckResult> out;
  Rng rng = make_rng(20260810);

  // Hermiticity closure of the two products.
  {
    double worst = 0.0;
    for (int n : {2, 3}) {
      for (int rep = 0; rep < 20; ++rep) {
        const ComplexMatrix a = random_hermitian(rng, n);
        const ComplexMatrix b = random_hermitian(rng, n);
        const ComplexMatrix lie = lie_product(a, b);
        const ComplexMatrix jor = jordan_product(a, b);
        worst = std::max(worst, (lie - lie.adjoint()).cwiseAbs().maxCoeff());
        worst = std::max(worst, (jor - jor.adjoint()).cwiseAbs().maxCoeff());
      }
    }
    add_check(out, "quantum.hermiticity_closure", worst, 1e-12);
  }

  // Jordan identity (a.b).(a.a) = a.(b.(a.a)).
  {
    double worst = 0.0;
    for (int n : {2, 3}) {
      for (int rep = 0; rep < 50; ++rep) {
        const ComplexMatrix a = random_hermitian(rng, n);
        const ComplexMatrix b = random_hermitian(rng, n);
        const ComplexMatrix aa = jordan_product(a, a);
        worst = std::max(worst, rel_defect(jordan_product(jordan_product(a, b), aa),
                                           jordan_product(a, jordan_product(b, aa))));
      }
    }
    add_check(out, "quantum.jordan_identity", worst, 1e-10);
  }

  // The Lie product acts by derivations of the Jordan product.
  {
    double worst = 0.0;
    for (int n : {2, 3}) {
      for (int rep = 0; rep < 50; ++rep) {
        const ComplexMatrix a = random_hermitian(rng, n);
        const ComplexMatrix b = random_hermitian(rng, n);
        const ComplexMatrix c = random_hermitian(rng, n);
        const ComplexMatrix lhs = lie_product(a, jordan_product(b, c));
        const ComplexMatrix rhs =
            jordan_product(lie_product(a, b), c) + jordan_product(b, lie_product(a, c));
        worst = std::max(worst, rel_defect(lhs, rhs));
      }
    }
    add_check(out, "quantum.leibniz_compatibility", worst, 1e-10);
  }

  // Structure-constant fixtures and reconstruction.
  for (int n : {2, 3, 4}) {
    const OperatorBasis basis = gellmann_basis(n);
    StructureConstants sc = structure_constants(basis);
    if (options.structure_constant_perturbation != 0.0) {
      sc.c(1, 2, 3) += options.structure_constant_perturbation;
    }
    const Eigen::Index m = basis.size();
    const double inv_sqrt_n = 1.0 / std::sqrt(double(n));

    double fixture_d = 0.0, fixture_c0 = 0.0, antisym = 0.0, d00j = 0.0;
    for (Eigen::Index mu = 0; mu < m; ++mu) {
      for (Eigen::Index nu = 0; nu < m; ++nu) {
        const double expected = (mu == nu) ? inv_sqrt_n : 0.0;
        fixture_d = std::max(fixture_d, std::abs(sc.d(mu, nu, 0) - expected));
        for (Eigen::Index sigma = 0; sigma < m; ++sigma) {
          fixture_c0 = std::max(fixture_c0, std::abs(sc.c(0, nu, sigma)));
          antisym = std::max(antisym, std::abs(sc.c(mu, nu, sigma) + sc.c(nu, mu, sigma)));
          antisym = std::max(antisym, std::abs(sc.c(mu, nu, sigma) + sc.c(mu, sigma, nu)));
        }
      }
    }
    for (Eigen::Index j = 1; j < m; ++j) d00j = std::max(d00j, std::abs(sc.d(0, 0, j)));
    const std::string tag = ".n" + std::to_string(n);
    add_check(out, "quantum.d_mu_nu_0_fixture" + tag, fixture_d, 1e-12);
    add_check(out, "quantum.c_0_nu_zero" + tag, fixture_c0, 1e-12);
    add_check(out, "quantum.d_00_j_zero" + tag, d00j, 1e-12);
    add_check(out, "quantum.c_total_antisymmetry" + tag, antisym, 1e-12);

    double reconstruction = 0.0;
    for (Eigen::Index mu = 0; mu < m; ++mu) {
      for (Eigen::Index nu = 0; nu < m; ++nu) {
        ComplexMatrix lie_sum = ComplexMatrix::Zero(n, n);
        ComplexMatrix jor_sum = ComplexMatrix::Zero(n, n);
        for (Eigen::Index sigma = 0; sigma < m; ++sigma) {
          lie_sum += sc.c(mu, nu, sigma) * basis.elements[static_cast<std::size_t>(sigma)];
          jor_sum += sc.d(mu, nu, sigma) * basis.elements[static_cast<std::size_t>(sigma)];
        }
        const auto& emu = basis.elements[static_cast<std::size_t>(mu)];
        const auto& enu = basis.elements[static_cast<std::size_t>(nu)];
        reconstruction =
            std::max(reconstruction, (lie_sum - lie_product(emu, enu)).cwiseAbs().maxCoeff());
        reconstruction =
            std::max(reconstruction, (jor_sum - jordan_product(emu, enu)).cwiseAbs().maxCoeff());
      }
    }
    add_check(out, "quantum.reconstruction" + tag, reconstruction, 1e-12);
  }

  // Unitary invariance of the structure constants.
  {
    double worst = 0.0;
    for (int n : {2, 3}) {
      const OperatorBasis basis = gellmann_basis(n);
      const StructureConstants sc = structure_constants(basis);
      for (int rep = 0; rep < 4; ++rep) {
        const StructureConstants rotated =
            conjugated_structure_constants(basis, random_unitary(rng, n));
        for (std::size_t i = 0; i < sc.c.data().size(); ++i) {
          worst = std::max(worst, std::abs(sc.c.data()[i] - rotated.c.data()[i]));
          worst = std::max(worst, std::abs(sc.d.data()[i] - rotated.d.data()[i]));
        }
      }
    }
    add_check(out, "quantum.unitary_invariance", worst, 1e-9);
  }

  // Tensor/flow consistency: d/dt closed_form_flow at t = 0 equals
  // X_a + Y~_b in coordinates.
  {
    double worst = 0.0;
    for (int n : {2, 3}) {
      const QuantumGeometry geom = make_quantum_geometry(n);
      for (int rep = 0; rep < 25; ++rep) {
        const ComplexMatrix a = random_hermitian(rng, n, 0.7);
        const ComplexMatrix b = random_hermitian(rng, n, 0.7);
        const DensityMatrix rho = random_density(rng, n, n);
        const PolyVectorField<double> field =
            hamiltonian_field(geom, a) + r_gradient_field(geom, b);
        const double h = 1e-6;
        const RealVector fwd =
            operator_to_coords(geom.basis, closed_form_flow(a, b, rho, h).rho);
        const RealVector bwd =
            operator_to_coords(geom.basis, closed_form_flow(a, b, rho, -h).rho);
        const RealVector fd = (fwd - bwd) / (2.0 * h);
        const RealVector predicted = field(operator_to_coords(geom.basis, rho.rho));
        const double scale = tolerance_scale(predicted.cwiseAbs().maxCoeff());
        worst = std::max(worst, (fd - predicted).cwiseAbs().maxCoeff() / scale);
      }
    }
    add_check(out, "quantum.flow_derivative_t0", worst, 1e-6);
  }

  // RK4 vs the closed-form conjugation flow, and rank/positivity/trace
  // preservation along the way.
  {
    double flow_err = 0.0, trace_err = 0.0, positivity = 0.0;
    int rank_mismatches = 0;
    for (int n : {2, 3}) {
      const QuantumGeometry geom = make_quantum_geometry(n);
      for (int rank = 1; rank <= n; ++rank) {
        const ComplexMatrix a = random_hermitian(rng, n, 0.5);
        const ComplexMatrix b = random_hermitian(rng, n, 0.5);
        const DensityMatrix rho = random_density(rng, n, rank);
        const PolyVectorField<double> field =
            hamiltonian_field(geom, a) + r_gradient_field(geom, b);
        const RealVector x0 = operator_to_coords(geom.basis, rho.rho);
        const Trajectory traj = integrate(field, x0, 1.0, 1000);
        const DensityMatrix moved = closed_form_flow(a, b, rho, 1.0);
        const RealVector expected = operator_to_coords(geom.basis, moved.rho);
        flow_err = std::max(flow_err, (traj.points.back() - expected).norm());
        trace_err = std::max(trace_err, std::abs(moved.rho.trace().real() - 1.0));
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(moved.rho, Eigen::EigenvaluesOnly);
        positivity = std::max(positivity, -es.eigenvalues().minCoeff());
        if (rank_of_state(moved).rank != rank) ++rank_mismatches;
        if (rank_of_state(closed_form_flow(a, b, rho, -5.0)).rank != rank) ++rank_mismatches;
        if (rank_of_state(closed_form_flow(a, b, rho, 5.0)).rank != rank) ++rank_mismatches;
      }
    }
    add_check(out, "quantum.rk4_vs_closed_form", flow_err, 1e-8);
    add_check(out, "quantum.flow_trace_one", trace_err, 1e-10);
    add_check(out, "quantum.flow_positivity", positivity, 1e-10);
    add_check(out, "quantum.rank_preservation", double(rank_mismatches), 0.5);
  }

  // Tangency dichotomy.
  {
    const QuantumGeometry geom = make_quantum_geometry(2);
    double ham_x0 = 0.0;
    for (const auto& e : geom.basis.elements) {
      ham_x0 = std::max(ham_x0, max_abs_coeff(hamiltonian_field(geom, e).comp[0]));
    }
    add_check(out, "quantum.hamiltonian_tangent_to_x0", ham_x0, 1e-14);

    const double witness =
        max_abs_coeff(gradient_field(geom, geom.basis.elements[1]).comp[0]);
    add_witness(out, "quantum.gradient_not_tangent_witness", witness, 0.1);

    const PolyVectorField<double> rg = r_gradient_field(geom, random_hermitian(rng, 2));
    double on_plane = 0.0;
    for (int s = 0; s < 50; ++s) {
      RealVector x = random_vector(rng, 4);
      x(0) = 1.0 / std::sqrt(2.0);
      on_plane = std::max(on_plane, std::abs(eval(rg.comp[0], x)));
    }
    add_check(out, "quantum.r_gradient_tangent_on_hyperplane", on_plane, 1e-10);
  }

  // Closure of the field families (n = 2).
  {
    const QuantumGeometry geom = make_quantum_geometry(2);
    std::vector<PolyVectorField<double>> gl_family;
    for (const auto& e : geom.basis.elements) gl_family.push_back(hamiltonian_field(geom, e));
    for (const auto& e : geom.basis.elements) gl_family.push_back(gradient_field(geom, e));
    const ClosureFitReport gl = closure_fit(gl_family);
    add_check(out, "quantum.gl_closure_residual", gl.max_residual, 1e-10);

    // [X_f, X_g] = X_{{f,g}}: the fitted constants of the Hamiltonian
    // sub-family reproduce the c-array.
    double match = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          match = std::max(match, std::abs(gl.constants(i, j, k) - geom.constants.c(i, j, k)));
    add_check(out, "quantum.hamiltonian_constants_match_c", match, 1e-9);

    std::vector<PolyVectorField<double>> sl_family;
    for (std::size_t mu = 1; mu < geom.basis.elements.size(); ++mu) {
      sl_family.push_back(hamiltonian_field(geom, geom.basis.elements[mu]));
    }
    for (std::size_t mu = 1; mu < geom.basis.elements.size(); ++mu) {
      sl_family.push_back(r_gradient_field(geom, geom.basis.elements[mu]));
    }
    add_check(out, "quantum.sl_closure_residual", closure_fit(sl_family).max_residual, 1e-10);
  }

  return out;
}

// ---------------------------------------------------------------------------
// simplex
// ---------------------------------------------------------------------------

std::vector<CheckResult> run_simplex_checks() {
  std::vector<CheckResult> out;
  Rng rng = make_rng(31415926);

  const PolyTensorField<double> lambda = simplex_lambda();
  const PolyTensorField<double> gee = simplex_g();
  const Chart xc = x_chart();
  const Poly<double> casimir = casimir_linear(3);

  add_check(out, "simplex.jacobi_lambda", max_jacobi_over_samples(lambda, rng, 200), 1e-10);
  add_check(out, "simplex.jacobi_lambda_xchart",
            max_jacobi_over_samples(pushforward(lambda, xc), rng, 50), 1e-10);
  add_check(out, "simplex.jacobi_pi", max_jacobi_over_samples(pi_tensor(), rng, 100), 1e-10);
  for (int n : {3, 4, 5}) {
    add_check(out, "simplex.jacobi_lambda_n" + std::to_string(n),
              max_jacobi_over_samples(general_lambda_n(n), rng, 50), 1e-10);
  }

  // Bracket fixtures {p1,p2} = {p2,p3} = {p3,p1} = C (exact integers).
  {
    double worst = 0.0;
    const Eigen::Index pairs[3][2] = {{0, 1}, {1, 2}, {2, 0}};
    for (const auto& pr : pairs) {
      const Poly<double> br = bracket_poly(lambda, Poly<double>::coordinate(3, pr[0]),
                                           Poly<double>::coordinate(3, pr[1]));
      worst = std::max(worst, coeff_distance(br, casimir));
    }
    add_check(out, "simplex.bracket_fixture_exact", worst, 0.0);
    RealVector vertex(3);
    vertex << 1.0, 0.0, 0.0;
    const double at_vertex = bracket_value(lambda, Poly<double>::coordinate(3, 0),
                                           Poly<double>::coordinate(3, 1), vertex);
    add_check(out, "simplex.bracket_at_vertex", std::abs(at_vertex - 1.0), 0.0);
  }

  // Casimir annihilation at the coefficient level, integer inputs exactly.
  {
    double exact = 0.0;
    for (Eigen::Index j = 0; j < 3; ++j) {
      exact = std::max(exact, max_abs_coeff(bracket_poly(lambda, casimir,
                                                         Poly<double>::coordinate(3, j))));
      exact = std::max(exact, max_abs_coeff(bracket_poly(gee, casimir,
                                                         Poly<double>::coordinate(3, j))));
    }
    RealVector q(3);
    q << 1.0, 2.0, 3.0;
    exact = std::max(exact,
                     max_abs_coeff(apply(hamiltonian_field_simplex(Poly<double>::linear_poly(q)),
                                         casimir)));
    add_check(out, "simplex.casimir_annihilation_exact", exact, 0.0);

    double random_case = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
      const Poly<double> f = random_poly(rng, 3, 2);
      random_case =
          std::max(random_case, max_abs_coeff(apply(hamiltonian_field_simplex(f), casimir)));
      random_case =
          std::max(random_case, max_abs_coeff(apply(gradient_field_simplex(f), casimir)));
    }
    for (int n : {3, 4, 5}) {
      const Poly<double> cn = casimir_linear(n);
      const PolyTensorField<double> ln = general_lambda_n(n);
      const PolyTensorField<double> gn = general_g_n(n);
      for (int rep = 0; rep < 10; ++rep) {
        const Poly<double> f = Poly<double>::linear_poly(random_vector(rng, n));
        random_case = std::max(random_case, max_abs_coeff(apply(contract_df(ln, f), cn)));
        random_case = std::max(random_case, max_abs_coeff(apply(contract_df(gn, f), cn)));
      }
    }
    add_check(out, "simplex.casimir_annihilation_random", random_case, 1e-13);
  }

  // Pushforward to the x-chart: single component (3/4)(x3 + 1).
  {
    const PolyTensorField<double> lx = pushforward(lambda, xc);
    PolyTensorField<double> expected(3);
    RealVector lin(3);
    lin << 0.0, 0.0, 0.75;
    expected.at(0, 1) = Poly<double>::linear_poly(lin, 0.75);
    expected.at(1, 0) = -1.0 * expected.at(0, 1);
    add_check(out, "simplex.pushforward_xchart_fixture", coeff_distance(lx, expected), 1e-12);

    const PolyTensorField<double> roundtrip = pushforward(lx, inverse_chart(xc));
    add_check(out, "simplex.pushforward_roundtrip", coeff_distance(roundtrip, lambda), 1e-12);

    RealVector p = random_vector(rng, 3, 0.1, 1.0);
    p /= p.sum();
    add_check(out, "simplex.x3_on_simplex", std::abs(xc.forward(p)(2)), 1e-12);
  }

  // Displayed coordinate forms of X_a and Y_a for linear a.
  {
    double worst = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
      const RealVector a = random_vector(rng, 3);
      const PolyVectorField<double> xa =
          hamiltonian_field_simplex(Poly<double>::linear_poly(a));
      const PolyVectorField<double> ya = gradient_field_simplex(Poly<double>::linear_poly(a));
      PolyVectorField<double> expected_x(3), expected_y(3);
      const Eigen::Vector3d w(a(2) - a(1), a(0) - a(2), a(1) - a(0));
      for (Eigen::Index j = 0; j < 3; ++j) {
        expected_x.comp[static_cast<std::size_t>(j)].linear = w(j) * RealVector::Ones(3);
        const double yw = 2.0 * a(j) - a((j + 1) % 3) - a((j + 2) % 3);
        expected_y.comp[static_cast<std::size_t>(j)].linear = yw * RealVector::Ones(3);
      }
      worst = std::max(worst, coeff_distance(xa, expected_x));
      worst = std::max(worst, coeff_distance(ya, expected_y));
    }
    add_check(out, "simplex.displayed_linear_fields", worst, 1e-14);
  }

  // Killing property and commutativity, coefficient-level.
  {
    double killing = 0.0, commuting = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
      const Poly<double> fa = Poly<double>::linear_poly(random_vector(rng, 3));
      const Poly<double> fb = Poly<double>::linear_poly(random_vector(rng, 3));
      const PolyVectorField<double> xa = hamiltonian_field_simplex(fa);
      const PolyVectorField<double> xb = hamiltonian_field_simplex(fb);
      const PolyVectorField<double> ya = gradient_field_simplex(fa);
      const PolyVectorField<double> yb = gradient_field_simplex(fb);
      killing = std::max(killing, max_abs_coeff(lie_derivative(xa, gee)));
      commuting = std::max(commuting, max_abs_coeff(commutator(xa, xb)));
      commuting = std::max(commuting, max_abs_coeff(commutator(xa, yb)));
      commuting = std::max(commuting, max_abs_coeff(commutator(ya, yb)));
    }
    add_check(out, "simplex.killing_LXa_G", killing, 1e-13);
    add_check(out, "simplex.linear_fields_commute", commuting, 1e-13);
  }

  // Quadratic Hamiltonians: displayed fixture, leaf tangency, sl(2) closure.
  {
    const auto quads = quadratic_hamiltonians();
    RealVector probe(3);
    probe << 1.0, 0.0, 0.0;
    const RealVector v = quads[0](probe);
    add_check(out, "simplex.quadratic_fixture_Xf1",
              std::max({std::abs(v(0)), std::abs(v(1) - 0.75), std::abs(v(2))}), 1e-14);

    double tangency = 0.0;
    for (const auto& q : quads) tangency = std::max(tangency, max_abs_coeff(q.comp[2]));
    add_check(out, "simplex.quadratic_annihilate_x3", tangency, 1e-14);

    std::vector<PolyVectorField<double>> sl2;
    for (const auto& q : quads) sl2.push_back(restrict_to_hyperplane(q, 2, 0.0));
    const ClosureFitReport fit = closure_fit(sl2, 0.75);
    add_check(out, "simplex.sl2_closure_residual", fit.max_residual, 1e-10);

    // Hand-computed 2x2 matrix commutators fix the expected constants:
    // [X1,X2] = 2C' X3, [X2,X3] = -2C' X1, [X3,X1] = 2C' X2 with C' = 3/4.
    double constants = 0.0;
    const auto expect = [&](int i, int j, const Eigen::Vector3d& want) {
      for (int k = 0; k < 3; ++k)
        constants = std::max(constants, std::abs(fit.constants(i, j, k) - 0.75 * want(k)));
    };
    expect(0, 1, {0.0, 0.0, 2.0});
    expect(1, 2, {-2.0, 0.0, 0.0});
    expect(2, 0, {0.0, 2.0, 0.0});
    add_check(out, "simplex.sl2_constants", constants, 1e-10);

    std::vector<PolyVectorField<double>> isl2;
    for (const auto& f : isl2_family()) isl2.push_back(restrict_to_hyperplane(f, 2, 0.0));
    add_check(out, "simplex.isl2_closure_residual", closure_fit(isl2).max_residual, 1e-10);
  }

  // Transitivity on the leaf: two translation flows reach a target.
  {
    const double cprime = 0.75;
    const PolyVectorField<double> x1 = coordinate_hamiltonian_x(0);
    const PolyVectorField<double> x2 = coordinate_hamiltonian_x(1);
    RealVector start(3), target(3);
    start << 0.1, -0.2, 0.0;
    target << -0.35, 0.4, 0.0;
    // X_{x1} translates along +x2, X_{x2} along -x1, both at speed C' = 3/4.
    const double t1 = (target(1) - start(1)) / cprime;
    const double t2 = (start(0) - target(0)) / cprime;
    const Trajectory leg1 = integrate(x1, start, t1, 200);
    const Trajectory leg2 = integrate(x2, leg1.points.back(), t2, 200);
    add_check(out, "simplex.leaf_transitivity", (leg2.points.back() - target).norm(), 1e-9);
  }

  // Quadratic bracket: Casimir conservation, face and octant invariance.
  {
    RealVector p0(3);
    p0 << 0.5, 0.3, 0.2;
    const Eigen::Vector3d a(1.0, 0.0, 0.0);
    const Trajectory traj = integrate(pi_hamiltonian(a), p0, 2.0, 2000);
    const double det0 = p0.prod();
    double casimir_drift = 0.0, min_entry = 1.0;
    for (const auto& p : traj.points) {
      casimir_drift = std::max(casimir_drift, std::abs(p.prod() - det0));
      min_entry = std::min(min_entry, p.minCoeff());
    }
    add_check(out, "simplex.pi_casimir_conservation", casimir_drift, 1e-8);
    add_witness(out, "simplex.pi_octant_invariance", min_entry, 0.0);

    RealVector face(3);
    face << 0.6, 0.4, 0.0;
    const Trajectory ftraj = integrate(pi_hamiltonian(Eigen::Vector3d(0.3, -0.7, 0.4)), face,
                                       1.0, 1000);
    double face_drift = 0.0;
    for (const auto& p : ftraj.points) face_drift = std::max(face_drift, std::abs(p(2)));
    add_check(out, "simplex.pi_face_invariance", face_drift, 1e-10);
  }

  // Quadratic bracket in the log chart is the constant bivector.
  {
    const PolyTensorField<double> pi = pi_tensor();
    const Chart lc = log_chart();
    RealMatrix pattern(3, 3);
    pattern << 0, 1, -1, -1, 0, 1, 1, -1, 0;
    double worst = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
      RealVector p = random_vector(rng, 3, 0.05, 1.0);
      p /= p.sum();
      worst = std::max(worst, (pushforward_at(pi, lc, p) - pattern).cwiseAbs().maxCoeff());
    }
    add_check(out, "simplex.pi_log_chart_constant", worst, 1e-8);
  }

  // Fisher-Rao fixtures and chart consistency.
  {
    RealVector center = RealVector::Constant(3, 1.0 / 3.0);
    const RealMatrix gp = fisher_rao(center, p_chart());
    const RealMatrix gl = fisher_rao(center, log_chart());
    double fixture = (gp - RealMatrix(RealVector::Constant(3, 3.0).asDiagonal()))
                         .cwiseAbs()
                         .maxCoeff();
    fixture = std::max(fixture, (gl - RealMatrix(RealVector::Constant(3, 1.0 / 3.0).asDiagonal()))
                                    .cwiseAbs()
                                    .maxCoeff());
    add_check(out, "simplex.fisher_rao_fixture", fixture, 1e-12);

    const Chart lc = log_chart();
    double consistency = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
      RealVector p = random_vector(rng, 3, 0.05, 1.0);
      p /= p.sum();
      const RealMatrix direct = fisher_rao(p, lc);
      const RealMatrix transformed = covariant_change_of_chart(fisher_rao(p, p_chart()),
                                                               lc.jacobian(p));
      consistency = std::max(consistency, (direct - transformed).cwiseAbs().maxCoeff());
    }
    add_check(out, "simplex.fisher_rao_chart_consistency", consistency, 1e-10);
  }

  // General-n tensors: n = 3 proportionality fixtures and commuting fields.
  {
    PolyTensorField<double> expected_l3(3), expected_g3(3);
    for (Eigen::Index i = 0; i < 3; ++i)
      for (Eigen::Index j = 0; j < 3; ++j) {
        expected_l3.at(i, j) = 3.0 * lambda.at(i, j);
        expected_g3.at(i, j) = -1.0 * gee.at(i, j);
      }
    double fixture = coeff_distance(general_lambda_n(3), expected_l3);
    fixture = std::max(fixture, coeff_distance(general_g_n(3), expected_g3));
    add_check(out, "simplex.general_n3_fixture", fixture, 0.0);

    double commuting = 0.0;
    for (int n : {3, 4, 5}) {
      const PolyTensorField<double> ln = general_lambda_n(n);
      const PolyTensorField<double> gn = general_g_n(n);
      std::vector<PolyVectorField<double>> family;
      for (int rep = 0; rep < 3; ++rep) {
        const Poly<double> f = Poly<double>::linear_poly(random_vector(rng, n));
        family.push_back(contract_df(ln, f));
        family.push_back(contract_df(gn, f));
      }
      for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
          commuting = std::max(commuting, max_abs_coeff(commutator(family[i], family[j])));
    }
    add_check(out, "simplex.general_n_commuting", commuting, 1e-13);
  }

  return out;
}

// ---------------------------------------------------------------------------
// algebra (Lie-Jordan structure of linear functions)
// ---------------------------------------------------------------------------

std::vector<CheckResult> run_algebra_checks() {
  std::vector<CheckResult> out;
  Rng rng = make_rng(27182818);
  const RealFunctional e1 = fn_e1(), e2 = fn_e2(), e3 = fn_e3();

  {
    double worst = (lie_bracket_fn(e1, e2) - e3).cwiseAbs().maxCoeff();
    worst = std::max(worst, lie_bracket_fn(e1, e3).cwiseAbs().maxCoeff());
    worst = std::max(worst, lie_bracket_fn(e2, e3).cwiseAbs().maxCoeff());
    worst = std::max(worst, (lie_bracket_fn(e2, e1) + e3).cwiseAbs().maxCoeff());
    add_check(out, "algebra.heisenberg_fixtures", worst, 1e-14);
  }
  {
    double worst = (jordan_fn(e1, e1) - 2.0 * e3).cwiseAbs().maxCoeff();
    worst = std::max(worst, (jordan_fn(e2, e2) - 2.0 * e3).cwiseAbs().maxCoeff());
    worst = std::max(worst, (jordan_fn(e1, e2) + e3).cwiseAbs().maxCoeff());
    for (const auto& ej : {e1, e2, e3})
      worst = std::max(worst, jordan_fn(e3, ej).cwiseAbs().maxCoeff());
    add_check(out, "algebra.jordan_fixtures", worst, 1e-14);
  }
  {
    const ComplexFunctional ce1 = e1.cast<Complex>(), ce2 = e2.cast<Complex>(),
                            ce3 = e3.cast<Complex>();
    const Complex i(0.0, 1.0);
    double worst = (star_product(ce1, ce2) - 0.5 * (Complex(-1.0) + i) * ce3)
                       .cwiseAbs()
                       .maxCoeff();
    worst = std::max(worst,
                     (star_product(ce2, ce1) + 0.5 * (Complex(1.0) + i) * ce3)
                         .cwiseAbs()
                         .maxCoeff());
    worst = std::max(worst, (star_product(ce1, ce1) - ce3).cwiseAbs().maxCoeff());
    for (const auto& cej : {ce1, ce2, ce3}) {
      worst = std::max(worst, star_product(ce3, cej).cwiseAbs().maxCoeff());
      worst = std::max(worst, star_product(cej, ce3).cwiseAbs().maxCoeff());
    }
    add_check(out, "algebra.star_fixtures", worst, 1e-14);
  }
  {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const auto random_functional = [&]() {
      ComplexFunctional f;
      for (int i = 0; i < 3; ++i) f(i) = Complex(dist(rng), dist(rng));
      return f;
    };
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
      const ComplexFunctional f = random_functional();
      const ComplexFunctional g = random_functional();
      const ComplexFunctional h = random_functional();
      worst = std::max(worst, (star_product(star_product(f, g), h) -
                               star_product(f, star_product(g, h)))
                                  .cwiseAbs()
                                  .maxCoeff());
    }
    add_check(out, "algebra.star_associativity", worst, 1e-12);
  }
  {
    double jordan_id = 0.0, derivation = 0.0, associator = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
      const RealFunctional f = RealFunctional::Random();
      const RealFunctional g = RealFunctional::Random();
      const RealFunctional h = RealFunctional::Random();
      const RealFunctional ff = jordan_fn(f, f);
      jordan_id = std::max(jordan_id, (jordan_fn(jordan_fn(f, g), ff) -
                                       jordan_fn(f, jordan_fn(g, ff)))
                                          .cwiseAbs()
                                          .maxCoeff());
      derivation = std::max(derivation, (lie_bracket_fn(f, jordan_fn(g, h)) -
                                         jordan_fn(lie_bracket_fn(f, g), h) -
                                         jordan_fn(g, lie_bracket_fn(f, h)))
                                            .cwiseAbs()
                                            .maxCoeff());
      associator = std::max(associator,
                            (jordan_fn(jordan_fn(f, g), h) - jordan_fn(f, jordan_fn(g, h)) -
                             lie_bracket_fn(g, lie_bracket_fn(h, f)))
                                .cwiseAbs()
                                .maxCoeff());
    }
    add_check(out, "algebra.jordan_identity_exact", jordan_id, 0.0);
    add_check(out, "algebra.lie_derivation_of_jordan", derivation, 1e-14);
    add_check(out, "algebra.associator_identity", associator, 1e-14);
  }
  {
    const NoUnitCertificate cert = certify_no_unit();
    add_witness(out, "algebra.no_unit_certificate",
                cert.has_unit ? 0.0 : cert.min_residual, 1.0);
  }
  return out;
}

// ---------------------------------------------------------------------------
// stochastic
// ---------------------------------------------------------------------------

namespace {

Eigen::Matrix3d random_stochastic(Rng& rng) {
  std::uniform_real_distribution<double> dist(0.01, 1.0);
  Eigen::Matrix3d m;
  for (int j = 0; j < 3; ++j) {
    Eigen::Vector3d col;
    for (int i = 0; i < 3; ++i) col(i) = dist(rng);
    m.col(j) = col / col.sum();
  }
  return m;
}

Eigen::Matrix3d random_pseudo_stochastic(Rng& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::Matrix3d m;
  for (int j = 0; j < 3; ++j) {
    Eigen::Vector3d col;
    for (int i = 0; i < 3; ++i) col(i) = dist(rng);
    col(2) = 1.0 - col(0) - col(1);
    m.col(j) = col;
  }
  return m;
}

const std::array<Eigen::Matrix3d, 6>& permutations3() {
  static const std::array<Eigen::Matrix3d, 6> perms = [] {
    std::array<Eigen::Matrix3d, 6> out;
    const int orders[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int p = 0; p < 6; ++p) {
      out[static_cast<std::size_t>(p)].setZero();
      for (int j = 0; j < 3; ++j) out[static_cast<std::size_t>(p)](orders[p][j], j) = 1.0;
    }
    return out;
  }();
  return perms;
}

}  // namespace

std::vector<CheckResult> run_stochastic_checks() {
  std::vector<CheckResult> out;
  Rng rng = make_rng(16180339);

  {
    int wrong = 0;
    const MatrixClassification id = classify(Eigen::Matrix3d::Identity());
    if (!(id.pseudo_stochastic && id.stochastic && id.bistochastic && id.invertible &&
          id.unit_determinant))
      ++wrong;
    for (const auto& p : permutations3()) {
      const MatrixClassification c = classify(p);
      if (!(c.bistochastic && c.invertible)) ++wrong;
    }
    Eigen::Matrix3d a;
    a << 1.5, 0, 0, -0.5, 1, 0, 0, 0, 1;
    const MatrixClassification c = classify(a);
    if (!c.pseudo_stochastic || c.stochastic) ++wrong;
    add_check(out, "stochastic.classification_fixtures", double(wrong), 0.5);
  }

  {
    double violation = 0.0;
    for (int rep = 0; rep < 25; ++rep) {
      const Eigen::Matrix3d s1 = random_stochastic(rng);
      const Eigen::Matrix3d s2 = random_stochastic(rng);
      const Eigen::Matrix3d prod = s1 * s2;
      violation = std::max(violation, std::max(-prod.minCoeff(), 0.0));
      violation = std::max(
          violation,
          ((Eigen::RowVector3d::Ones() * prod) - Eigen::RowVector3d::Ones()).cwiseAbs().maxCoeff());
      std::uniform_real_distribution<double> wdist(0.0, 1.0);
      const double w = wdist(rng);
      const Eigen::Matrix3d convex = w * s1 + (1.0 - w) * s2;
      violation = std::max(violation, std::max(-convex.minCoeff(), 0.0));
      const Eigen::Matrix3d p1 = random_pseudo_stochastic(rng);
      const Eigen::Matrix3d p2 = random_pseudo_stochastic(rng);
      violation = std::max(violation, ((Eigen::RowVector3d::Ones() * (p1 * p2)) -
                                       Eigen::RowVector3d::Ones())
                                          .cwiseAbs()
                                          .maxCoeff());
    }
    add_check(out, "stochastic.semigroup_closure", violation, 1e-12);
  }

  {
    const auto family = isl2_family();
    double column_sums = 0.0, hyperplane = 0.0;
    for (const auto& gen : family) {
      for (double t : {0.4, 1.0}) {
        const Eigen::Matrix3d map = isl2_exponential(gen, t);
        column_sums = std::max(column_sums, ((Eigen::RowVector3d::Ones() * map) -
                                             Eigen::RowVector3d::Ones())
                                                .cwiseAbs()
                                                .maxCoeff());
        for (int rep = 0; rep < 5; ++rep) {
          Eigen::Vector3d p;
          std::uniform_real_distribution<double> dist(-1.0, 1.0);
          p << dist(rng), dist(rng), 0.0;
          p(2) = 1.0 - p(0) - p(1);
          hyperplane = std::max(hyperplane, std::abs((map * p).sum() - 1.0));
        }
      }
    }
    add_check(out, "stochastic.isl2_pseudo_stochastic", column_sums, 1e-9);
    add_check(out, "stochastic.isl2_hyperplane_preserved", hyperplane, 1e-9);

    const auto quads = quadratic_hamiltonians();
    double unit_det = 0.0;
    for (const auto& q : quads) {
      unit_det = std::max(unit_det, std::abs(isl2_exponential(q, 1.0).determinant() - 1.0));
    }
    add_check(out, "stochastic.isl2_unit_determinant", unit_det, 1e-10);

    double composition = 0.0;
    for (const auto& gen : {family[2], family[3]}) {
      const Eigen::Matrix3d m1 = isl2_exponential(gen, 0.7);
      const Eigen::Matrix3d m2 = isl2_exponential(gen, 0.5);
      const Eigen::Matrix3d m12 = isl2_exponential(gen, 1.2);
      composition = std::max(composition, (m1 * m2 - m12).cwiseAbs().maxCoeff());
    }
    add_check(out, "stochastic.isl2_one_parameter_composition", composition, 1e-9);
  }

  {
    int failures = 0;
    for (int rep = 0; rep < 20; ++rep) {
      const Eigen::Matrix3d a = random_pseudo_stochastic(rng);
      const MatrixClassification c = classify(a);
      const auto witness = positivity_escape_witness(a);
      if (c.stochastic) {
        if (witness) ++failures;
      } else {
        if (!witness || (a * *witness).minCoeff() >= 0.0) ++failures;
      }
      const auto none = positivity_escape_witness(random_stochastic(rng));
      if (none) ++failures;
    }
    add_check(out, "stochastic.positivity_escape_witness", double(failures), 0.5);
  }

  {
    int wrong = 0;
    for (const auto& p : permutations3()) {
      if (!bistochastic_inverse_probe(p).inverse_bistochastic) ++wrong;
    }
    const Eigen::Matrix3d mix =
        (Eigen::Matrix3d::Ones() / 3.0) * (1.0 / 3.0) + Eigen::Matrix3d::Identity() * (2.0 / 3.0);
    const InverseProbe probe = bistochastic_inverse_probe(mix);
    if (probe.inverse_bistochastic || probe.min_inverse_entry >= 0.0) ++wrong;

    // Mesh of Birkhoff combinations: an invertible non-permutation mixture
    // never has a bistochastic inverse.
    std::uniform_real_distribution<double> wdist(0.05, 1.0);
    for (int rep = 0; rep < 30; ++rep) {
      Eigen::Matrix3d b = Eigen::Matrix3d::Zero();
      double total = 0.0;
      Eigen::Matrix<double, 6, 1> weights;
      for (int p = 0; p < 6; ++p) {
        weights(p) = wdist(rng);
        total += weights(p);
      }
      weights /= total;
      for (int p = 0; p < 6; ++p) b += weights(p) * permutations3()[static_cast<std::size_t>(p)];
      if (!classify(b).invertible) continue;
      if (bistochastic_inverse_probe(b).inverse_bistochastic && weights.maxCoeff() < 0.999)
        ++wrong;
    }
    add_check(out, "stochastic.bistochastic_inverse_probe", double(wrong), 0.5);
  }

  {
    bool threw = false;
    try {
      Eigen::Matrix3d swap12;
      swap12 << 0, 1, 0, 1, 0, 0, 0, 0, 1;
      bistochastic_inverse_probe(0.5 * (Eigen::Matrix3d::Identity() + swap12));
    } catch (const SingularMatrixError&) {
      threw = true;
    }
    add_check(out, "stochastic.singular_average_rejected", threw ? 0.0 : 1.0, 0.5);
  }

  add_check(out, "stochastic.tangent_dimension_is_6",
            std::abs(double(pseudo_stochastic_tangent_dimension()) - 6.0), 0.5);

  return out;
}

// ---------------------------------------------------------------------------
// contraction
// ---------------------------------------------------------------------------

std::vector<CheckResult> run_contraction_checks() {
  std::vector<CheckResult> out;
  Rng rng = make_rng(14142135);

  add_check(out, "contraction.lambda0_equals_simplex",
            coeff_distance(bivector_from_casimir(0.0), simplex_lambda()), 0.0);

  {
    PolyTensorField<double> su2(3);
    const int eps[3][3][3] = {{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
                              {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
                              {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}};
    for (Eigen::Index i = 0; i < 3; ++i)
      for (Eigen::Index j = 0; j < 3; ++j)
        for (Eigen::Index k = 0; k < 3; ++k)
          if (eps[i][j][k] != 0) su2.at(i, j).linear(k) = double(eps[i][j][k]);
    add_check(out, "contraction.lambda1_is_su2",
              coeff_distance(bivector_from_casimir(1.0), su2), 0.0);
  }

  {
    double worst = 0.0;
    for (double lambda : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const PolyTensorField<double> t = bivector_from_casimir(lambda);
      const Poly<double> c = casimir_poly(lambda);
      for (Eigen::Index j = 0; j < 3; ++j) {
        worst = std::max(worst,
                         max_abs_coeff(bracket_poly(t, Poly<double>::coordinate(3, j), c)));
      }
    }
    add_check(out, "contraction.casimir_bracket_exact", worst, 0.0);
  }

  {
    double worst = 0.0;
    for (double lambda : {0.0, 0.3, 0.7, 1.0}) {
      worst = std::max(worst,
                       max_jacobi_over_samples(bivector_from_casimir(lambda), rng, 50));
    }
    add_check(out, "contraction.jacobi", worst, 1e-10);
  }

  {
    double drift = 0.0;
    for (double lambda : {0.0, 0.5, 1.0}) {
      const PolyTensorField<double> t = bivector_from_casimir(lambda);
      for (Eigen::Index j = 0; j < 3; ++j) {
        const PolyVectorField<double> field =
            contract_df(t, Poly<double>::coordinate(3, j));
        RealVector x0(3);
        x0 << 0.6, 0.3, 0.1;
        const Trajectory traj = integrate(field, x0, 1.0, 1000);
        const double c0 = casimir_value(lambda, Eigen::Vector3d(x0(0), x0(1), x0(2)));
        const RealVector xe = traj.points.back();
        drift = std::max(drift, std::abs(casimir_value(lambda, Eigen::Vector3d(xe(0), xe(1),
                                                                               xe(2))) -
                                         c0));
      }
    }
    add_check(out, "contraction.casimir_conservation", drift, 1e-8);
  }

  {
    // Coordinate Hamiltonians close on su(2) at lambda = 1 and on the
    // degenerate (commutative) Heisenberg quotient at lambda = 0, where the
    // central element has a vanishing Hamiltonian field.
    std::vector<PolyVectorField<double>> su2_fields;
    const PolyTensorField<double> t1 = bivector_from_casimir(1.0);
    for (Eigen::Index j = 0; j < 3; ++j)
      su2_fields.push_back(contract_df(t1, Poly<double>::coordinate(3, j)));
    const ClosureFitReport fit = closure_fit(su2_fields);
    double su2_err = fit.max_residual;
    // [X_i, X_j] = X_{{x_i, x_j}} = eps_{ijk} X_k for the su(2) brackets
    // {x_i, x_j} = eps_{ijk} x_k.
    const int eps[3][3][3] = {{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
                              {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
                              {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          su2_err = std::max(su2_err,
                             std::abs(fit.constants(i, j, k) - double(eps[i][j][k])));
    add_check(out, "contraction.su2_closure_at_1", su2_err, 1e-10);

    const PolyTensorField<double> t0 = bivector_from_casimir(0.0);
    double heisenberg = 0.0;
    std::vector<PolyVectorField<double>> h_fields;
    for (Eigen::Index j = 0; j < 3; ++j)
      h_fields.push_back(contract_df(t0, Poly<double>::coordinate(3, j)));
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        heisenberg = std::max(heisenberg, max_abs_coeff(commutator(h_fields[i], h_fields[j])));
    // Function-level brackets at lambda = 0 all give the central element C.
    const Poly<double> central = casimir_linear(3);
    const Eigen::Index pairs[3][2] = {{0, 1}, {1, 2}, {2, 0}};
    for (const auto& pr : pairs) {
      const Poly<double> br = bracket_poly(t0, Poly<double>::coordinate(3, pr[0]),
                                           Poly<double>::coordinate(3, pr[1]));
      heisenberg = std::max(heisenberg, coeff_distance(br, central));
    }
    add_check(out, "contraction.heisenberg_at_0", heisenberg, 1e-13);
  }

  {
    const FlatnessProfile flat0 = flatness_profile(0.0, 24);
    add_check(out, "contraction.flatness_zero_at_0", flat0.max_deviation, 1e-12);

    double previous = -1.0;
    double monotone_violation = 0.0;
    for (double lambda : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const FlatnessProfile prof = flatness_profile(lambda, 24);
      if (prof.max_deviation < previous) {
        monotone_violation = std::max(monotone_violation, previous - prof.max_deviation);
      }
      previous = prof.max_deviation;
    }
    add_check(out, "contraction.flatness_monotone", monotone_violation, 1e-12);

    // Bisection along the barycenter normal as an independent oracle for the
    // lambda = 1 (spherical) deviation.
    const Eigen::Vector3d center(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0);
    const Eigen::Vector3d n = Eigen::Vector3d::Ones() / std::sqrt(3.0);
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (casimir_value(1.0, center + mid * n) < 1.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const double oracle = 0.5 * (lo + hi);
    const FlatnessProfile flat1 = flatness_profile(1.0, 24);
    add_check(out, "contraction.flatness_barycenter_oracle",
              std::abs(flat1.max_deviation - oracle), 1e-9);
  }

  return out;
}

std::vector<CheckResult> run_suite(const std::string& suite, const CheckOptions& options) {
  if (suite == "quantum") return run_quantum_checks(options);
  if (suite == "simplex") return run_simplex_checks();
  if (suite == "algebra") return run_algebra_checks();
  if (suite == "stochastic") return run_stochastic_checks();
  if (suite == "contraction") return run_contraction_checks();
  if (suite == "all") {
    std::vector<CheckResult> out = run_quantum_checks(options);
    for (const auto& suite_fn :
         {run_simplex_checks, run_algebra_checks, run_stochastic_checks,
          run_contraction_checks}) {
      const auto results = suite_fn();
      out.insert(out.end(), results.begin(), results.end());
    }
    return out;
  }
  throw ConfigError("unknown check suite: " + suite);
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace stategeom
