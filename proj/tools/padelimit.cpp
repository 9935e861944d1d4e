// Copyright 2026 The padelimit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// padelimit: command-line front end for the last-intermediate-row analysis.
//
//   padelimit analyze    --model ex1.json
//   padelimit approx     --model ex4.json --n 3 --point -1/2
//   padelimit verify     --model ex2.json --point -4/5 --n-max 60 --csv trace.csv
//   padelimit trajectory --model ex1.json --n-max 60 --csv poles.csv
//
// Exit codes: 0 ok, 1 unreadable input, 2 model or assumption violation,
// 3 observed behaviour contradicts the prediction.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "padelimit/io.hpp"
#include "padelimit/padelimit.hpp"

namespace {

using padelimit::Complex;
using padelimit::Error;
using padelimit::ErrorCode;
using padelimit::GaussianRational;
using padelimit::io::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitAssumption = 2;
constexpr int kExitMismatch = 3;

struct JobConfig {
  std::string command;
  std::string model_path;
  std::string model_inline;
  std::string mode = "auto";
  std::size_t n = 0;
  std::size_t n_max = 60;
  std::size_t sigma_cap = padelimit::kDefaultSigmaCap;
  std::vector<std::string> points;
  std::string out_path;
  std::string csv_path;
};

json load_model_json(const JobConfig& cfg) {
  std::string text;
  if (!cfg.model_inline.empty()) {
    text = cfg.model_inline;
  } else {
    std::ifstream in(cfg.model_path);
    if (!in) throw Error(ErrorCode::kParseError, "cannot open model file '" + cfg.model_path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("malformed model JSON: ") + e.what());
  }
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParseError, "cannot write '" + path + "'");
  out << text;
}

template <padelimit::Field F>
struct Analysis {
  padelimit::DominantStructure structure;
  std::vector<F> C;
  padelimit::OmegaFamily<F> omegas;
  padelimit::LimitPointReport report;
};

template <padelimit::Field F>
Analysis<F> analyse(const padelimit::RationalModel<F>& model, std::size_t sigma_cap) {
  Analysis<F> a;
  a.structure = padelimit::detect_dominance(model, sigma_cap);
  a.C = padelimit::c_constants(model);
  a.omegas = padelimit::omega_family<F>(model, a.structure, a.C);
  a.report = padelimit::limit_point_report(model, a.structure, a.omegas);
  return a;
}

template <padelimit::Field F>
int run_analyze(const JobConfig& cfg, const padelimit::RationalModel<F>& model) {
  const auto a = analyse(model, cfg.sigma_cap);
  emit(cfg.out_path, padelimit::io::dump_json(padelimit::io::report_json<F>(
                         model, a.structure, a.C, a.omegas, a.report)));
  return kExitOk;
}

template <padelimit::Field F>
int run_approx(const JobConfig& cfg, const padelimit::RationalModel<F>& model) {
  using padelimit::io::to_json;
  const auto approx = padelimit::pade(model, cfg.n);

  json oracle;
  try {
    const auto toeplitz = padelimit::toeplitz_pade_oracle(model, cfg.n);
    oracle = {{"status", padelimit::proportional(approx, toeplitz) ? "agree" : "disagree"}};
  } catch (const Error& e) {
    const bool singular = e.code() == ErrorCode::kSingularSystem;
    oracle = {{"status", singular ? "singular" : "unavailable"},
              {"reason", std::string(padelimit::to_string(e.code()))}};
  }

  json points = json::array();
  for (const auto& text : cfg.points) {
    const F z = padelimit::io::parse_scalar_text<F>(text);
    json entry = {{"z", to_json(z)}};
    try {
      const F value = approx(z);
      entry["value"] = to_json(value);
      const F r = padelimit::eval_r(model, z);
      entry["r"] = to_json(r);
      const auto sides = padelimit::residual_identity(model, approx, z);
      entry["residual"] = to_json(sides.lhs);
      entry["residual_identity_holds"] =
          padelimit::nearly_equal(sides.lhs, sides.rhs, 1e-9 * std::max(1.0, padelimit::abs_value(sides.lhs)));
    } catch (const Error& e) {
      entry["error"] = {{"code", std::string(padelimit::to_string(e.code()))}, {"message", e.what()}};
    }
    points.push_back(entry);
  }

  json out = {{"mode", std::string(padelimit::scalar_traits<F>::mode_name)},
              {"n", cfg.n},
              {"type", json::array({cfg.n, model.lambda() - 1})},
              {"numerator", to_json(approx.num)},
              {"denominator", to_json(approx.den)},
              {"in_type_class", approx.in_type_class()},
              {"oracle", oracle},
              {"points", points}};
  emit(cfg.out_path, padelimit::io::dump_json(out));
  return kExitOk;
}

template <padelimit::Field F>
int run_verify(const JobConfig& cfg, const padelimit::RationalModel<F>& model) {
  if (cfg.points.size() != 1) {
    throw Error(ErrorCode::kParseError, "verify needs exactly one --point");
  }
  const auto a = analyse(model, cfg.sigma_cap);
  const F zeta = padelimit::io::parse_scalar_text<F>(cfg.points.front());
  const auto trace = padelimit::evaluate_sequence(model, zeta, cfg.n_max,
                                                  {a.structure.sigma, true, std::nullopt});
  const auto cls = padelimit::classify_observed(trace, model, a.report);

  if (!cfg.csv_path.empty()) {
    std::ostringstream csv;
    padelimit::io::write_trace_csv(csv, trace);
    emit(cfg.csv_path, csv.str());
  }
  bool identity = true;
  for (const auto& e : trace.entries) {
    if (e.identity_holds && !*e.identity_holds) identity = false;
  }
  json summary = padelimit::io::classification_json(cls);
  json r_at = nullptr;
  if (trace.r_at_zeta) r_at = padelimit::io::to_json(*trace.r_at_zeta);
  json out = {{"mode", std::string(padelimit::scalar_traits<F>::mode_name)},
              {"zeta", padelimit::io::to_json(zeta)},
              {"n_max", cfg.n_max},
              {"sigma", a.structure.sigma},
              {"r_at_zeta", r_at},
              {"identity_holds", identity}};
  for (auto it = summary.begin(); it != summary.end(); ++it) out[it.key()] = it.value();
  emit(cfg.out_path, padelimit::io::dump_json(out));
  return (cls.match && !*cls.match) ? kExitMismatch : kExitOk;
}

template <padelimit::Field F>
int run_trajectory(const JobConfig& cfg, const padelimit::RationalModel<F>& model) {
  std::vector<padelimit::LimitTarget> targets;
  std::size_t sigma = 1;
  json structure_error = nullptr;
  try {
    const auto a = analyse(model, cfg.sigma_cap);
    targets = padelimit::predicted_targets(model, a.report);
    sigma = a.structure.sigma;
  } catch (const Error& e) {
    // Models outside the dominance assumptions still have a trajectory.
    structure_error = std::string(padelimit::to_string(e.code()));
  }
  const auto traj = padelimit::pole_trajectory(model, cfg.n_max, targets, sigma);

  std::ostringstream csv;
  padelimit::io::write_trajectory_csv(csv, traj);
  if (cfg.csv_path.empty()) {
    emit(cfg.out_path, csv.str());
    return kExitOk;
  }
  emit(cfg.csv_path, csv.str());

  json series = json::array();
  for (std::size_t t = 0; t < traj.targets.size(); ++t) {
    json d = json::array();
    for (const auto& x : traj.distances[t]) d.push_back(x ? json(*x) : json(nullptr));
    series.push_back({{"target", traj.targets[t].label}, {"nearest_root_distance", d}});
  }
  json out = {{"mode", std::string(padelimit::scalar_traits<F>::mode_name)},
              {"n_max", cfg.n_max},
              {"sigma", sigma},
              {"structure_error", structure_error},
              {"targets", series}};
  emit(cfg.out_path, padelimit::io::dump_json(out));
  return kExitOk;
}

template <padelimit::Field F>
int dispatch(const JobConfig& cfg, const json& model_json) {
  const auto model = padelimit::io::parse_model<F>(model_json);
  if (cfg.command == "analyze") return run_analyze(cfg, model);
  if (cfg.command == "approx") return run_approx(cfg, model);
  if (cfg.command == "verify") return run_verify(cfg, model);
  return run_trajectory(cfg, model);
}

int run(const JobConfig& cfg) {
  const json model_json = load_model_json(cfg);
  if (cfg.mode == "float") return dispatch<Complex>(cfg, model_json);
  if (cfg.mode == "exact") return dispatch<GaussianRational>(cfg, model_json);
  if (!padelimit::io::model_is_exact(model_json)) return dispatch<Complex>(cfg, model_json);
  try {
    return dispatch<GaussianRational>(cfg, model_json);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kIrrationalPole) throw;
    return dispatch<Complex>(cfg, model_json);
  }
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kInvalidArgument:
      return kExitParse;
    default:
      return kExitAssumption;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pade approximants of the last intermediate row: pole limit sets and pointwise convergence"};
  app.require_subcommand(1);
  JobConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    auto* path = sub->add_option("--model", cfg.model_path, "model JSON file");
    auto* inline_json = sub->add_option("--model-json", cfg.model_inline, "model JSON given inline");
    path->excludes(inline_json);
    sub->add_option("--mode", cfg.mode, "arithmetic: exact, float or auto")
        ->check(CLI::IsMember({"auto", "exact", "float"}));
    sub->add_option("--sigma-cap", cfg.sigma_cap, "largest polygon order tried")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out_path, "write JSON here instead of stdout");
  };

  auto* analyze = app.add_subcommand("analyze", "dominance structure, omega family and limit-point verdicts");
  add_common(analyze);

  auto* approx = app.add_subcommand("approx", "one approximant, its values and the oracle check");
  add_common(approx);
  approx->add_option("--n", cfg.n, "numerator degree n")->required();
  approx->add_option("--point", cfg.points, "evaluation point (repeatable)");

  auto* verify = app.add_subcommand("verify", "evaluate the sequence at a point and compare with the prediction");
  add_common(verify);
  verify->add_option("--point", cfg.points, "the point zeta")->required();
  verify->add_option("--n-max", cfg.n_max, "largest n")->check(CLI::PositiveNumber);
  verify->add_option("--csv", cfg.csv_path, "write the trace CSV here");

  auto* trajectory = app.add_subcommand("trajectory", "poles of the approximants against the predicted limit set");
  add_common(trajectory);
  trajectory->add_option("--n-max", cfg.n_max, "largest n")->check(CLI::PositiveNumber);
  trajectory->add_option("--csv", cfg.csv_path, "write the CSV here (stdout otherwise)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  if (cfg.model_path.empty() && cfg.model_inline.empty()) {
    std::cerr << padelimit::io::dump_json(padelimit::io::error_json(
        Error(ErrorCode::kParseError, "one of --model or --model-json is required")));
    return kExitParse;
  }

  try {
    return run(cfg);
  } catch (const Error& e) {
    std::cerr << padelimit::io::dump_json(padelimit::io::error_json(e));
    return exit_code_for(e.code());
  }
}
