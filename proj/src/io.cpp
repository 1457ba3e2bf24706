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
#include "stategeom/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "stategeom/contraction.hpp"
#include "stategeom/quantum_geometry.hpp"
#include "stategeom/simplex_geometry.hpp"

namespace stategeom {

std::string format_sig17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string escape_json(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

void append_vector_json(std::string& out, const RealVector& v) {
  out += '[';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_sig17(v(i));
  }
  out += ']';
}

void append_tensor3_json(std::string& out, const Tensor3& t) {
  const Eigen::Index m = t.extent();
  out += '[';
  for (Eigen::Index i = 0; i < m; ++i) {
    if (i) out += ',';
    out += '[';
    for (Eigen::Index j = 0; j < m; ++j) {
      if (j) out += ',';
      out += '[';
      for (Eigen::Index k = 0; k < m; ++k) {
        if (k) out += ',';
        out += format_sig17(t(i, j, k));
      }
      out += ']';
    }
    out += ']';
  }
  out += ']';
}

}  // namespace

std::string trajectory_csv(const Trajectory& traj) {
  std::string out = "t";
  const Eigen::Index m = traj.point_dim();
  for (Eigen::Index i = 0; i < m; ++i) out += ",x" + std::to_string(i);
  out += '\n';
  for (std::size_t row = 0; row < traj.times.size(); ++row) {
    out += format_sig17(traj.times[row]);
    for (Eigen::Index i = 0; i < m; ++i) {
      out += ',';
      out += format_sig17(traj.points[row](i));
    }
    out += '\n';
  }
  return out;
}

std::string trajectory_json(const Trajectory& traj,
                            const std::optional<RealVector>& closed_form_endpoint) {
  std::string out = "{\"meta\":{";
  out += "\"generator\":\"" + escape_json(traj.meta.generator) + "\",";
  out += "\"method\":\"" + escape_json(traj.meta.method) + "\",";
  out += "\"step\":" + format_sig17(traj.meta.step);
  if (closed_form_endpoint) {
    out += ",\"closed_form_endpoint\":";
    append_vector_json(out, *closed_form_endpoint);
  }
  out += "},\"times\":[";
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    if (i) out += ',';
    out += format_sig17(traj.times[i]);
  }
  out += "],\"points\":[";
  for (std::size_t i = 0; i < traj.points.size(); ++i) {
    if (i) out += ',';
    append_vector_json(out, traj.points[i]);
  }
  out += "]}\n";
  return out;
}

std::string structure_constants_json(const StructureConstants& sc) {
  std::string out = "{\"n\":" + std::to_string(sc.dim) + ",\"c\":";
  append_tensor3_json(out, sc.c);
  out += ",\"d\":";
  append_tensor3_json(out, sc.d);
  out += "}\n";
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream stream(tmp, std::ios::binary | std::ios::trunc);
    if (!stream) throw ConfigError("cannot open output file: " + tmp);
    stream << content;
    if (!stream.good()) throw ConfigError("failed to write: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

namespace {

std::vector<double> number_list(const nlohmann::json& j, const char* key) {
  std::vector<double> out;
  if (!j.contains(key)) return out;
  const auto& arr = j.at(key);
  if (!arr.is_array()) throw ConfigError(std::string("config field is not an array: ") + key);
  for (const auto& v : arr) {
    if (!v.is_number()) throw ConfigError(std::string("non-numeric entry in ") + key);
    out.push_back(v.get<double>());
  }
  return out;
}

RealVector to_vector(const std::vector<double>& v) {
  RealVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  RunConfig cfg;
  try {
    cfg.system = j.value("system", std::string{});
    cfg.n = j.value("n", 0);
    cfg.a = number_list(j, "a");
    cfg.b = number_list(j, "b");
    cfg.start = number_list(j, "start");
    cfg.lambda = j.value("lambda", 0.0);
    cfg.t_max = j.value("t_max", 1.0);
    cfg.steps = j.value("steps", 1000);
    cfg.out = j.value("out", std::string{});
    cfg.format = j.value("format", std::string("csv"));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config field error: ") + e.what());
  }
  return cfg;
}

std::string run_config_json(const RunConfig& config) {
  nlohmann::json j;
  j["system"] = config.system;
  j["n"] = config.n;
  j["a"] = config.a;
  j["b"] = config.b;
  j["start"] = config.start;
  j["lambda"] = config.lambda;
  j["t_max"] = config.t_max;
  j["steps"] = config.steps;
  j["out"] = config.out;
  j["format"] = config.format;
  return j.dump(2) + "\n";
}

namespace {

void require_size(const std::vector<double>& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw ConfigError(std::string(what) + ": expected " + std::to_string(n) +
                      " coefficients, got " + std::to_string(v.size()));
  }
}

FlowResult run_quantum_flow(const RunConfig& cfg) {
  if (cfg.n < 2 || cfg.n > 8) throw ConfigError("quantum flow: n must be in [2, 8]");
  const std::size_t m = static_cast<std::size_t>(cfg.n) * static_cast<std::size_t>(cfg.n);
  const QuantumGeometry geom = make_quantum_geometry(cfg.n);

  std::vector<double> ac = cfg.a, bc = cfg.b, sc = cfg.start;
  if (ac.empty()) ac.assign(m, 0.0);
  if (bc.empty()) bc.assign(m, 0.0);
  require_size(ac, m, "quantum flow generator a");
  require_size(bc, m, "quantum flow generator b");
  if (sc.empty()) {
    // Default start: the maximally mixed state.
    const ComplexMatrix mixed = ComplexMatrix::Identity(cfg.n, cfg.n) / double(cfg.n);
    const RealVector x0 = operator_to_coords(geom.basis, mixed);
    sc.assign(x0.data(), x0.data() + x0.size());
  }
  require_size(sc, m, "quantum flow start point");

  const ComplexMatrix a = coords_to_operator(geom.basis, to_vector(ac));
  const ComplexMatrix b = coords_to_operator(geom.basis, to_vector(bc));
  const PolyVectorField<double> field =
      hamiltonian_field(geom, a) + r_gradient_field(geom, b);

  FlowResult result;
  result.trajectory = integrate(field, to_vector(sc), cfg.t_max, cfg.steps,
                                "quantum X_a + Y~_b (n=" + std::to_string(cfg.n) + ")");
  const ComplexMatrix xi = coords_to_operator(geom.basis, to_vector(sc));
  try {
    const ComplexMatrix moved = dual_point_flow(a, b, xi, cfg.t_max, /*normalize=*/true);
    result.closed_form_endpoint = operator_to_coords(geom.basis, moved);
  } catch (const DegenerateFlowError&) {
    // Indefinite start point whose closed-form normalization vanished; the
    // RK4 trajectory stands on its own.
  }
  return result;
}

FlowResult run_simplex_flow(const RunConfig& cfg) {
  std::vector<double> ac = cfg.a, sc = cfg.start;
  require_size(ac, 3, "simplex flow generator a");
  if (sc.empty()) sc = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  require_size(sc, 3, "simplex flow start point");

  PolyVectorField<double> field =
      hamiltonian_field_simplex(Poly<double>::linear_poly(to_vector(ac)));
  if (!cfg.b.empty()) {
    require_size(cfg.b, 3, "simplex flow generator b");
    field = field + gradient_field_simplex(Poly<double>::linear_poly(to_vector(cfg.b)));
  }
  FlowResult result;
  result.trajectory = integrate(field, to_vector(sc), cfg.t_max, cfg.steps, "simplex X_a + Y_b");
  return result;
}

FlowResult run_pi_flow(const RunConfig& cfg) {
  std::vector<double> ac = cfg.a, sc = cfg.start;
  require_size(ac, 3, "pi flow generator a");
  if (sc.empty()) sc = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  require_size(sc, 3, "pi flow start point");
  const Eigen::Vector3d a(ac[0], ac[1], ac[2]);
  FlowResult result;
  result.trajectory = integrate(pi_hamiltonian(a), to_vector(sc), cfg.t_max, cfg.steps,
                                "quadratic-bracket X_a");
  return result;
}

FlowResult run_contraction_flow(const RunConfig& cfg) {
  std::vector<double> ac = cfg.a, sc = cfg.start;
  require_size(ac, 3, "contraction flow generator a");
  if (sc.empty()) sc = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  require_size(sc, 3, "contraction flow start point");
  const PolyVectorField<double> field =
      contract_df(bivector_from_casimir(cfg.lambda), Poly<double>::linear_poly(to_vector(ac)));
  FlowResult result;
  result.trajectory = integrate(field, to_vector(sc), cfg.t_max, cfg.steps,
                                "contraction-family X_a (lambda=" + format_sig17(cfg.lambda) +
                                    ")");
  return result;
}

}  // namespace

FlowResult run_flow(const RunConfig& config) {
  if (config.steps < 1) throw ConfigError("flow: steps must be >= 1");
  if (!std::isfinite(config.t_max)) throw ConfigError("flow: t_max must be finite");
  if (config.format != "csv" && config.format != "json") {
    throw ConfigError("flow: format must be csv or json");
  }
  if (config.system == "quantum") return run_quantum_flow(config);
  if (config.system == "simplex") return run_simplex_flow(config);
  if (config.system == "pi") return run_pi_flow(config);
  if (config.system == "contraction") return run_contraction_flow(config);
  throw ConfigError("flow: unknown system '" + config.system + "'");
}

}  // namespace stategeom
