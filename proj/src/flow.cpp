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
#include "stategeom/flow.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace stategeom {

namespace {

bool all_finite(const RealVector& x) { return x.allFinite(); }

// Stacks the coefficient data of a field (constants, linear parts, quadratic
// parts) into one column vector.
RealVector vectorize(const PolyVectorField<double>& v) {
  const Eigen::Index m = v.dim();
  const Eigen::Index per_comp = 1 + m + m * m;
  RealVector out = RealVector::Zero(m * per_comp);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Poly<double>& p = v.comp[static_cast<std::size_t>(i)];
    Eigen::Index base = i * per_comp;
    out(base) = p.constant;
    out.segment(base + 1, m) = p.linear;
    if (p.has_quadratic()) {
      out.segment(base + 1 + m, m * m) =
          Eigen::Map<const RealVector>(p.quadratic.data(), m * m);
    }
  }
  return out;
}

}  // namespace

Trajectory integrate(const PolyVectorField<double>& field, const RealVector& x0, double t_max,
                     int steps, const std::string& generator_description) {
  if (steps < 1) throw InvalidDimensionError("integrate: steps must be >= 1");
  if (!std::isfinite(t_max)) throw InvalidDimensionError("integrate: t_max must be finite");
  if (x0.size() != field.dim()) {
    throw DimensionMismatchError("integrate: start point has wrong dimension");
  }
  const double h = t_max / steps;
  Trajectory traj;
  traj.meta.generator = generator_description;
  traj.meta.step = h;
  traj.times.reserve(static_cast<std::size_t>(steps) + 1);
  traj.points.reserve(static_cast<std::size_t>(steps) + 1);
  traj.times.push_back(0.0);
  traj.points.push_back(x0);

  RealVector x = x0;
  for (int s = 1; s <= steps; ++s) {
    const RealVector k1 = field(x);
    const RealVector k2 = field((x + (h / 2.0) * k1).eval());
    const RealVector k3 = field((x + (h / 2.0) * k2).eval());
    const RealVector k4 = field((x + h * k3).eval());
    x = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!all_finite(x)) {
      throw DivergenceError("integrate: non-finite state at step " + std::to_string(s),
                            std::move(traj));
    }
    traj.times.push_back(h * s);
    traj.points.push_back(x);
  }
  return traj;
}

ClosureFitReport closure_fit(const std::vector<PolyVectorField<double>>& fields,
                             double leaf_prefactor) {
  const int nf = static_cast<int>(fields.size());
  if (nf < 2) throw InvalidDimensionError("closure_fit: need at least two fields");
  const Eigen::Index m = fields.front().dim();
  for (const auto& f : fields) {
    if (f.dim() != m) throw DimensionMismatchError("closure_fit: mixed field dimensions");
  }

  RealMatrix basis(vectorize(fields.front()).size(), nf);
  for (int k = 0; k < nf; ++k) basis.col(k) = vectorize(fields[static_cast<std::size_t>(k)]);

  Eigen::BDCSVD<RealMatrix> svd(basis, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-12);

  ClosureFitReport report;
  report.field_count = nf;
  report.constants = Tensor3(nf);
  report.normalized_constants = Tensor3(nf);
  report.residuals = RealMatrix::Zero(nf, nf);
  report.basis_rank = static_cast<int>(svd.rank());
  report.rank_deficient = report.basis_rank < nf;

  for (int i = 0; i < nf; ++i) {
    for (int j = i + 1; j < nf; ++j) {
      const PolyVectorField<double> comm =
          commutator(fields[static_cast<std::size_t>(i)], fields[static_cast<std::size_t>(j)]);
      const RealVector w = vectorize(comm);
      const RealVector z = svd.solve(w);
      const double residual = (basis * z - w).cwiseAbs().maxCoeff();
      report.residuals(i, j) = residual;
      report.residuals(j, i) = residual;
      report.max_residual = std::max(report.max_residual, residual);
      for (int k = 0; k < nf; ++k) {
        report.constants(i, j, k) = z(k);
        report.constants(j, i, k) = -z(k);
        report.normalized_constants(i, j, k) = z(k) / leaf_prefactor;
        report.normalized_constants(j, i, k) = -z(k) / leaf_prefactor;
      }
    }
  }
  return report;
}

}  // namespace stategeom
