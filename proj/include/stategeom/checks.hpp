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

#include "stategeom/types.hpp"

namespace stategeom {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct CheckOptions {
  // Test hook: added to one Lie structure constant before the quantum
  // reconstruction checks run, to prove the suite is sensitive.
  double structure_constant_perturbation = 0.0;
};

std::vector<CheckResult> run_quantum_checks(const CheckOptions& options = {});
std::vector<CheckResult> run_simplex_checks();
std::vector<CheckResult> run_algebra_checks();
std::vector<CheckResult> run_stochastic_checks();
std::vector<CheckResult> run_contraction_checks();

/// suite: all | quantum | simplex | algebra | stochastic | contraction.
std::vector<CheckResult> run_suite(const std::string& suite, const CheckOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace stategeom
