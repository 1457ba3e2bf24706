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

#include <optional>
#include <string>

#include "stategeom/flow.hpp"
#include "stategeom/operator_algebra.hpp"

namespace stategeom {

/// Number formatted with 17 significant digits (round-trips a double).
std::string format_sig17(double v);

// CSV with header row `t,x0,x1,...`, comma separators, '\n' line endings and
// 17 significant digits; bit-stable for identical inputs.
std::string trajectory_csv(const Trajectory& traj);

/// JSON variant with a metadata block ("meta", "times", "points").
std::string trajectory_json(const Trajectory& traj,
                            const std::optional<RealVector>& closed_form_endpoint = std::nullopt);

/// {"n": ..., "c": [[[...]]], "d": [[[...]]]} with row-major nested arrays.
std::string structure_constants_json(const StructureConstants& sc);

/// Writes via a temp file plus rename so readers never see partial output.
void write_file_atomic(const std::string& path, const std::string& content);

// Flow run description: which system, the generator coefficients in that
// system's canonical basis, the start point, and the integration window.
struct RunConfig {
  std::string system;  // quantum | simplex | pi | contraction
  int n = 0;           // quantum Hilbert-space dimension (ignored elsewhere)
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> start;
  double lambda = 0.0;  // contraction parameter
  double t_max = 1.0;
  int steps = 1000;
  std::string out;
  std::string format = "csv";  // csv | json
};

RunConfig parse_run_config(const std::string& json_text);
std::string run_config_json(const RunConfig& config);

struct FlowResult {
  Trajectory trajectory;
  // Endpoint of the closed-form conjugation flow, for quantum runs.
  std::optional<RealVector> closed_form_endpoint;
};

/// Builds the field named by the config, integrates it, and (for the quantum
/// system) attaches the closed-form endpoint for cross-checking.
FlowResult run_flow(const RunConfig& config);

}  // namespace stategeom
