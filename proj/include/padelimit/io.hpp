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

#ifndef PADELIMIT_IO_HPP_
#define PADELIMIT_IO_HPP_

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "padelimit/bezout.hpp"
#include "padelimit/convergence.hpp"
#include "padelimit/error.hpp"
#include "padelimit/model.hpp"
#include "padelimit/poly.hpp"
#include "padelimit/row_analysis.hpp"
#include "padelimit/scalar.hpp"

namespace padelimit::io {

using json = nlohmann::ordered_json;

enum class Mode { kExact, kFloat };

inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// ---------------------------------------------------------------------------
// Scalars. Exact values are "p/q" strings, integers, or a pair of strings
// ["re", "im"] for a Gaussian rational; a pair of JSON numbers is a float
// complex value.

inline bool is_exact_scalar(const json& j) {
  if (j.is_string() || j.is_number_integer()) return true;
  if (j.is_array() && j.size() == 2) {
    return (j[0].is_string() || j[0].is_number_integer()) &&
           (j[1].is_string() || j[1].is_number_integer()) &&
           (j[0].is_string() || j[1].is_string());
  }
  return false;
}

inline Rational parse_exact_component(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorCode::kParseError, "expected an exact number, got " + j.dump());
}

inline double parse_float_component(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return to_double(parse_rational(j.get<std::string>()));
  throw Error(ErrorCode::kParseError, "expected a number, got " + j.dump());
}

template <Field F>
F parse_scalar(const json& j) {
  if constexpr (is_exact_v<F>) {
    if (!is_exact_scalar(j)) {
      throw Error(ErrorCode::kParseError,
                  "value " + j.dump() + " is not exact; use strings or --mode float");
    }
    if (j.is_array()) return GaussianRational(parse_exact_component(j[0]), parse_exact_component(j[1]));
    return GaussianRational(parse_exact_component(j));
  } else {
    if (j.is_array()) {
      if (j.size() != 2) throw Error(ErrorCode::kParseError, "complex value needs [re, im]");
      return check_finite(Complex(parse_float_component(j[0]), parse_float_component(j[1])), "input");
    }
    return check_finite(Complex(parse_float_component(j), 0.0), "input");
  }
}

/// Command-line scalar: "1/3", "-0.5", or a JSON pair such as [0.5, 0.25].
template <Field F>
F parse_scalar_text(std::string_view text) {
  const std::string s(text);
  if (!s.empty() && s.front() == '[') {
    json j;
    try {
      j = json::parse(s);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParseError, "bad point '" + s + "': " + e.what());
    }
    return parse_scalar<F>(j);
  }
  return parse_scalar<F>(json(s));
}

inline json to_json(const GaussianRational& z) {
  if (z.is_real()) return format_rational(z.real());
  return json::array({format_rational(z.real()), format_rational(z.imag())});
}

inline json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

inline json to_json(const Root& r) {
  if (r.exact) return to_json(*r.exact);
  return to_json(r.value);
}

template <Field F>
json to_json(const Poly<F>& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

// ---------------------------------------------------------------------------
// Models: {"poles": [{"z": ..., "residue": ...}, ...]} or
// {"num": [c0, c1, ...], "den": [c0, c1, ...]}.

inline bool model_is_exact(const json& j) {
  auto all_exact = [](const json& arr) {
    for (const auto& x : arr) {
      if (!is_exact_scalar(x)) return false;
    }
    return true;
  };
  if (j.contains("poles")) {
    for (const auto& p : j.at("poles")) {
      if (!p.is_object() || !p.contains("z") || !p.contains("residue")) return false;
      if (!is_exact_scalar(p.at("z")) || !is_exact_scalar(p.at("residue"))) return false;
    }
    return true;
  }
  if (j.contains("num") && j.contains("den")) return all_exact(j.at("num")) && all_exact(j.at("den"));
  return false;
}

template <Field F>
RationalModel<F> parse_model(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParseError, "model must be a JSON object");
  const bool has_poles = j.contains("poles");
  const bool has_nd = j.contains("num") || j.contains("den");
  if (has_poles == has_nd) {
    throw Error(ErrorCode::kParseError, "model needs exactly one of \"poles\" or \"num\"/\"den\"");
  }
  if (has_poles) {
    const auto& arr = j.at("poles");
    if (!arr.is_array()) throw Error(ErrorCode::kParseError, "\"poles\" must be an array");
    std::vector<Pole<F>> poles;
    for (const auto& p : arr) {
      if (!p.is_object() || !p.contains("z") || !p.contains("residue")) {
        throw Error(ErrorCode::kParseError, "each pole needs \"z\" and \"residue\"");
      }
      poles.push_back({parse_scalar<F>(p.at("z")), parse_scalar<F>(p.at("residue"))});
    }
    return RationalModel<F>::from_partial_fractions(std::move(poles));
  }
  if (!j.contains("num") || !j.contains("den") || !j.at("num").is_array() || !j.at("den").is_array()) {
    throw Error(ErrorCode::kParseError, "\"num\" and \"den\" must both be arrays");
  }
  auto read = [](const json& arr) {
    std::vector<F> v;
    for (const auto& c : arr) v.push_back(parse_scalar<F>(c));
    return Poly<F>(std::move(v));
  };
  return RationalModel<F>::from_num_den(read(j.at("num")), read(j.at("den")));
}

// ---------------------------------------------------------------------------
// Deterministic JSON text: insertion-ordered keys, two-space indent, and
// every float printed with %.17g (non-finite floats become null).

namespace detail {

inline void dump(const json& j, std::ostringstream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << inner << json(it.key()).dump() << ": ";
        dump(it.value(), os, indent + 1);
      }
      os << "\n" << pad << "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      bool scalars = true;
      for (const auto& x : j) scalars = scalars && !x.is_structured();
      if (scalars) {
        os << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ", ";
          dump(j[i], os, indent + 1);
        }
        os << "]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << inner;
        dump(j[i], os, indent + 1);
      }
      os << "\n" << pad << "]";
      return;
    }
    case json::value_t::number_float: {
      const double x = j.get<double>();
      os << (std::isfinite(x) ? format_double(x) : std::string("null"));
      return;
    }
    default:
      os << j.dump();
  }
}

}  // namespace detail

inline std::string dump_json(const json& j) {
  std::ostringstream os;
  detail::dump(j, os, 0);
  os << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Reports.

inline json error_json(const Error& e) {
  return {{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}};
}

template <Field F>
json model_json(const RationalModel<F>& model) {
  json poles = json::array();
  for (std::size_t j = 0; j < model.lambda(); ++j) {
    poles.push_back({{"index", j}, {"z", to_json(model.pole(j))}, {"residue", to_json(model.residue(j))}});
  }
  return {{"lambda", model.lambda()},
          {"poles", poles},
          {"num", to_json(model.numerator())},
          {"den", to_json(model.denominator())}};
}

inline json structure_json(const DominantStructure& s) {
  json chain = json::array();
  for (auto r : s.chain) chain.push_back(std::string(to_string(r)));
  return {{"rho", s.rho},
          {"nu", s.nu},
          {"sigma", s.sigma},
          {"order", s.order},
          {"chain", chain},
          {"dominant", std::vector<std::size_t>(s.dominant().begin(), s.dominant().end())},
          {"subdominant", s.subdominant()}};
}

template <Field F>
json report_json(const RationalModel<F>& model, const DominantStructure& s, std::span<const F> C,
                 const OmegaFamily<F>& omegas, const LimitPointReport& report) {
  json cs = json::array();
  for (const auto& c : C) cs.push_back(to_json(c));
  json omega = json::array();
  for (std::size_t m = 0; m < omegas.polys.size(); ++m) {
    omega.push_back({{"m", m}, {"coeffs", to_json(omegas.polys[m])}});
  }
  json nondominant = json::array();
  for (std::size_t j : report.nondominant_poles) {
    nondominant.push_back({{"index", j}, {"z", to_json(model.pole(j))}});
  }
  json points = json::array();
  for (const auto& pt : report.additional_points) {
    json alts = json::array();
    for (auto v : pt.alternatives) alts.push_back(std::string(to_string(v)));
    json coincide = nullptr;
    if (pt.coincides_with_pole) coincide = *pt.coincides_with_pole;
    points.push_back({{"zeta", to_json(pt.zeta)},
                      {"exact", pt.zeta.exact.has_value()},
                      {"multiplicity", pt.zeta.multiplicity},
                      {"modulus", std::abs(pt.zeta.value)},
                      {"m", pt.m},
                      {"verdict", std::string(to_string(pt.verdict))},
                      {"alternatives", alts},
                      {"coincides_with_pole", coincide},
                      {"residue_class",
                       {{"m", pt.residue_class.m},
                        {"sigma", pt.residue_class.sigma},
                        {"lambda", pt.residue_class.lambda},
                        {"first_n", pt.residue_class.first()}}}});
  }
  return {{"mode", std::string(scalar_traits<F>::mode_name)},
          {"model", model_json(model)},
          {"C", cs},
          {"structure", structure_json(s)},
          {"delta", to_json(omegas.delta)},
          {"omega", omega},
          {"threshold_modulus", report.threshold_modulus},
          {"limit_set", {{"nondominant_poles", nondominant}, {"additional_points", points}}}};
}

inline json classification_json(const ObservedClassification& c) {
  json classes = json::array();
  for (const auto& b : c.classes) {
    json theory = nullptr, consistent = nullptr;
    if (b.theoretical_ratio) theory = *b.theoretical_ratio;
    if (b.ratio_consistent) consistent = *b.ratio_consistent;
    classes.push_back({{"m", b.m},
                       {"behavior", std::string(to_string(b.behavior))},
                       {"samples", b.samples},
                       {"omega_root", b.omega_root},
                       {"fitted_ratio", b.fitted_ratio},
                       {"theoretical_ratio", theory},
                       {"ratio_consistent", consistent},
                       {"threshold_exceeded", b.threshold_exceeded}});
  }
  json predicted = nullptr, match = nullptr;
  if (c.predicted) predicted = std::string(to_string(*c.predicted));
  if (c.match) match = *c.match;
  return {{"predicted", predicted},
          {"observed", std::string(to_string(c.headline))},
          {"whole_sequence", std::string(to_string(c.whole_sequence))},
          {"match", match},
          {"classes", classes}};
}

// ---------------------------------------------------------------------------
// CSV (header row, comma separated, LF endings).

template <Field F>
void write_trace_csv(std::ostream& os, const SequenceTrace<F>& trace) {
  os << "n,m,value_re,value_im,error,nearest_root_distance\n";
  for (const auto& e : trace.entries) {
    os << e.n << ',' << e.m << ',';
    if (e.value) {
      const Complex v = to_complex(*e.value);
      os << format_double(v.real()) << ',' << format_double(v.imag());
    } else {
      os << "inf,inf";
    }
    os << ',';
    if (e.deviation) os << format_double(std::exp(e.log_error));
    os << ',';
    if (e.nearest_root_distance) os << format_double(*e.nearest_root_distance);
    os << '\n';
  }
}

inline void write_trajectory_csv(std::ostream& os, const PoleTrajectory& traj) {
  os << "n,m,root_index,root_re,root_im,nearest_target,distance\n";
  for (const auto& step : traj.steps) {
    for (std::size_t i = 0; i < step.roots.size(); ++i) {
      const Complex& r = step.roots[i];
      os << step.n << ',' << step.m << ',' << i << ',' << format_double(r.real()) << ','
         << format_double(r.imag()) << ',';
      std::optional<std::size_t> best;
      double best_d = 0.0;
      for (std::size_t t = 0; t < traj.targets.size(); ++t) {
        const double d = std::abs(r - traj.targets[t].point);
        if (!best || d < best_d) {
          best = t;
          best_d = d;
        }
      }
      if (best) os << traj.targets[*best].label << ',' << format_double(best_d);
      else os << ',';
      os << '\n';
    }
  }
}

}  // namespace padelimit::io

#endif  // PADELIMIT_IO_HPP_
