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

#include <string>
#include <vector>

#include "stategeom/poly.hpp"

namespace stategeom {

struct TrajectoryMeta {
  std::string generator;
  std::string method = "rk4";
  double step = 0.0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<RealVector> points;
  TrajectoryMeta meta;

  Eigen::Index point_dim() const { return points.empty() ? 0 : points.front().size(); }
};

/// Raised when an integration produces a non-finite state; carries the part
/// of the trajectory computed so far.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, Trajectory partial_trajectory)
      : Error(what), partial(std::move(partial_trajectory)) {}

  Trajectory partial;
};

// Classical fixed-step fourth-order Runge-Kutta trajectory of the field from
// x0 over [0, t_max] (t_max may be negative).  Deterministic: identical
// inputs give bit-identical trajectories.
Trajectory integrate(const PolyVectorField<double>& field, const RealVector& x0, double t_max,
                     int steps, const std::string& generator_description = "");

struct ClosureFitReport {
  int field_count = 0;
  // constants(i, j, k): coefficient of field k in the least-squares fit of
  // [V_i, V_j] onto the span of the family.
  Tensor3 constants;
  // Same constants divided by the requested leaf prefactor.
  Tensor3 normalized_constants;
  // Absolute fit residual per pair (max coefficient of commutator - fit).
  RealMatrix residuals;
  double max_residual = 0.0;
  int basis_rank = 0;
  bool rank_deficient = false;
};

// Computes all pairwise commutators and fits each back onto the span of the
// input family in coefficient space.  Singular values below 1e-12 * sigma_max
// are treated as zero; a rank-deficient family is reported, not fatal.
ClosureFitReport closure_fit(const std::vector<PolyVectorField<double>>& fields,
                             double leaf_prefactor = 1.0);

}  // namespace stategeom
