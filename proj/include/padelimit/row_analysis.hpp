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

#ifndef PADELIMIT_ROW_ANALYSIS_HPP_
#define PADELIMIT_ROW_ANALYSIS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "padelimit/bezout.hpp"
#include "padelimit/error.hpp"
#include "padelimit/model.hpp"
#include "padelimit/poly.hpp"
#include "padelimit/roots.hpp"
#include "padelimit/scalar.hpp"

namespace padelimit {

inline constexpr std::size_t kDefaultSigmaCap = 128;
// Relative tolerance for float-mode modulus ties and polygon checks.
inline constexpr double kModulusTol = 1e-10;

enum class ModulusRelation { kEqual, kGreater, kGreaterOrEqual };

constexpr std::string_view to_string(ModulusRelation r) noexcept {
  switch (r) {
    case ModulusRelation::kEqual: return "=";
    case ModulusRelation::kGreater: return ">";
    case ModulusRelation::kGreaterOrEqual: return ">=";
  }
  return "?";
}

/// Dominant poles z_1..z_nu on the circle |z| = rho, forming vertices of a
/// regular sigma-gon, followed by a strictly smaller subdominant pole.
struct DominantStructure {
  double rho = 0.0;
  std::size_t nu = 0;
  std::size_t sigma = 0;
  // Pole indices (model order) by decreasing modulus; order[0] is z_1.
  std::vector<std::size_t> order;
  // chain[i] relates |order[i]| to |order[i+1]|: '=' inside the dominant
  // block, '>' at nu and nu+1, '>=' or '=' further down.
  std::vector<ModulusRelation> chain;

  std::span<const std::size_t> dominant() const { return {order.data(), nu}; }
  std::span<const std::size_t> nondominant() const {
    return {order.data() + nu, order.size() - nu};
  }
  std::size_t leading() const { return order.front(); }
  std::size_t subdominant() const { return order.at(nu); }
};

namespace detail {

// -1, 0, 1 as |a| <, =, > |b|. Exact on Gaussian rationals.
template <Field F>
int compare_modulus(const F& a, const F& b) {
  if constexpr (is_exact_v<F>) {
    return cmp(a.norm(), b.norm()) < 0 ? -1 : (cmp(a.norm(), b.norm()) > 0 ? 1 : 0);
  } else {
    const double ma = std::abs(a), mb = std::abs(b);
    if (std::fabs(ma - mb) <= kModulusTol * std::max(ma, mb)) return 0;
    return ma < mb ? -1 : 1;
  }
}

}  // namespace detail

template <Field F>
DominantStructure detect_dominance(const RationalModel<F>& model,
                                   std::size_t sigma_cap = kDefaultSigmaCap) {
  const std::size_t lambda = model.lambda();
  DominantStructure s;
  s.order.resize(lambda);
  std::iota(s.order.begin(), s.order.end(), std::size_t{0});
  std::stable_sort(s.order.begin(), s.order.end(), [&](std::size_t a, std::size_t b) {
    return detail::compare_modulus(model.pole(a), model.pole(b)) > 0;
  });

  for (std::size_t i = 0; i + 1 < lambda; ++i) {
    const bool eq = detail::compare_modulus(model.pole(s.order[i]), model.pole(s.order[i + 1])) == 0;
    s.chain.push_back(eq ? ModulusRelation::kEqual : ModulusRelation::kGreater);
  }
  s.nu = 1;
  while (s.nu < lambda && s.chain[s.nu - 1] == ModulusRelation::kEqual) ++s.nu;
  if (s.nu == lambda) {
    throw Error(ErrorCode::kAllDominant,
                "all " + std::to_string(lambda) + " poles share the maximal modulus");
  }
  if (lambda - s.nu >= 2 && s.chain[s.nu] == ModulusRelation::kEqual) {
    throw Error(ErrorCode::kSubdominantTie,
                "|z_(nu+1)| = |z_(nu+2)| with nu = " + std::to_string(s.nu));
  }
  for (std::size_t i = s.nu + 1; i < s.chain.size(); ++i) {
    if (s.chain[i] == ModulusRelation::kGreater) s.chain[i] = ModulusRelation::kGreaterOrEqual;
  }
  s.rho = abs_value(model.pole(s.leading()));

  // Smallest sigma >= nu with z_j^sigma equal over the dominant block.
  std::vector<F> powers;
  for (std::size_t j : s.dominant()) powers.push_back(power(model.pole(j), std::max<std::size_t>(s.nu, 1)));
  for (std::size_t sigma = std::max<std::size_t>(s.nu, 1); sigma <= sigma_cap; ++sigma) {
    bool equal = true;
    for (std::size_t j = 1; j < powers.size() && equal; ++j) {
      if constexpr (is_exact_v<F>) {
        equal = powers[j] == powers[0];
      } else {
        equal = std::abs(powers[j] - powers[0]) <= kModulusTol * std::abs(powers[0]);
      }
    }
    if (equal) {
      s.sigma = sigma;
      return s;
    }
    for (std::size_t j = 0; j < powers.size(); ++j) powers[j] *= model.pole(s.dominant()[j]);
  }
  throw Error(ErrorCode::kNoRegularPolygon,
              "dominant poles are not vertices of a regular sigma-gon with sigma <= " +
                  std::to_string(sigma_cap));
}

/// omega_m(z) = sum over dominant j of C_j z_j^m Delta_j(z), m = 0..sigma-1,
/// with Delta(z) = prod over dominant j of (z - z_j) and Delta_j = Delta/(z - z_j).
template <Field F>
struct OmegaFamily {
  std::vector<Poly<F>> polys;
  Poly<F> delta;
};

template <Field F>
OmegaFamily<F> omega_family(const RationalModel<F>& model, const DominantStructure& s,
                            std::span<const F> C) {
  OmegaFamily<F> out;
  out.delta = Poly<F>::constant(F(1));
  for (std::size_t j : s.dominant()) out.delta *= Poly<F>::linear(model.pole(j));

  std::vector<Poly<F>> delta_j;
  for (std::size_t j : s.dominant()) {
    Poly<F> d = Poly<F>::constant(F(1));
    for (std::size_t i : s.dominant()) {
      if (i != j) d *= Poly<F>::linear(model.pole(i));
    }
    delta_j.push_back(std::move(d));
  }
  for (std::size_t m = 0; m < s.sigma; ++m) {
    Poly<F> w;
    for (std::size_t t = 0; t < s.nu; ++t) {
      const std::size_t j = s.dominant()[t];
      w += delta_j[t] * (C[j] * power(model.pole(j), m));
    }
    out.polys.push_back(std::move(w));
  }
  return out;
}

/// Predicted behaviour of the row at an additional limit point zeta, from comparing |zeta|
/// with the subdominant modulus |z_(nu+1)|.
enum class Verdict {
  kConverges,               // |zeta| < |z_(nu+1)|: the whole row converges to r
  kNoLimitOnCircle,         // |zeta| = |z_(nu+1)|: the limit does not exist
  kDivergesToInfinity,      // |zeta| > |z_(nu+1)|: infinite along Lambda_m
  kUnclassifiedCoincident,  // zeta is a nondominant pole; no prediction
  kBoundary,                // float tie within tolerance; see alternatives
};

constexpr std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::kConverges: return "Converges";
    case Verdict::kNoLimitOnCircle: return "NoLimitOnCircle";
    case Verdict::kDivergesToInfinity: return "DivergesToInfinity";
    case Verdict::kUnclassifiedCoincident: return "Unclassified-Coincident";
    case Verdict::kBoundary: return "Boundary";
  }
  return "?";
}

/// Lambda_m = { n >= 0 : n + lambda = m (mod sigma) }.
struct ResidueClass {
  std::size_t m = 0;
  std::size_t sigma = 1;
  std::size_t lambda = 0;

  bool contains(std::size_t n) const { return (n + lambda) % sigma == m; }
  std::size_t first() const { return (m + sigma - lambda % sigma) % sigma; }
};

struct AdditionalPoint {
  Root zeta;
  std::size_t m = 0;
  Verdict verdict = Verdict::kConverges;
  std::vector<Verdict> alternatives;  // filled for kBoundary only
  std::optional<std::size_t> coincides_with_pole;
  ResidueClass residue_class;
};

struct LimitPointReport {
  std::vector<std::size_t> nondominant_poles;  // pole indices, order of decreasing modulus
  std::vector<AdditionalPoint> additional_points;
  double threshold_modulus = 0.0;  // |z_(nu+1)|
  double rho = 0.0;                // |z_1|
  std::size_t sigma = 1;
};

namespace detail {

template <Field F>
bool root_equals_pole(const Root& root, const F& pole) {
  if constexpr (is_exact_v<F>) {
    if (root.exact) return *root.exact == pole;
  }
  return std::abs(root.value - to_complex(pole)) <= kModulusTol;
}

template <Field F>
Verdict modulus_verdict(const Root& root, const F& subdominant) {
  if constexpr (is_exact_v<F>) {
    if (root.exact) {
      const int c = cmp(root.exact->norm(), subdominant.norm());
      if (c < 0) return Verdict::kConverges;
      if (c == 0) return Verdict::kNoLimitOnCircle;
      return Verdict::kDivergesToInfinity;
    }
  }
  const double a = std::abs(root.value);
  const double b = abs_value(subdominant);
  if (std::fabs(a - b) <= kModulusTol * std::max(a, b)) return Verdict::kBoundary;
  return a < b ? Verdict::kConverges : Verdict::kDivergesToInfinity;
}

}  // namespace detail

template <Field F>
LimitPointReport limit_point_report(const RationalModel<F>& model, const DominantStructure& s,
                                    const OmegaFamily<F>& omegas) {
  LimitPointReport report;
  report.nondominant_poles.assign(s.nondominant().begin(), s.nondominant().end());
  const F& sub = model.pole(s.subdominant());
  report.threshold_modulus = abs_value(sub);
  report.rho = s.rho;
  report.sigma = s.sigma;

  for (std::size_t m = 0; m < omegas.polys.size(); ++m) {
    const auto& w = omegas.polys[m];
    if (w.degree() < 1) continue;
    for (auto& root : find_roots(w)) {
      for (std::size_t j : s.dominant()) {
        if (detail::root_equals_pole(root, model.pole(j))) {
          throw Error(ErrorCode::kDominantRootAnomaly,
                      "omega_" + std::to_string(m) + " vanishes at a dominant pole");
        }
      }
      AdditionalPoint pt;
      pt.m = m;
      pt.residue_class = {m, s.sigma, model.lambda()};
      for (std::size_t j : s.nondominant()) {
        if (detail::root_equals_pole(root, model.pole(j))) {
          pt.coincides_with_pole = j;
          break;
        }
      }
      if (pt.coincides_with_pole) {
        pt.verdict = Verdict::kUnclassifiedCoincident;
      } else {
        pt.verdict = detail::modulus_verdict(root, sub);
        if (pt.verdict == Verdict::kBoundary) {
          pt.alternatives = {Verdict::kConverges, Verdict::kDivergesToInfinity};
        }
      }
      pt.zeta = std::move(root);
      report.additional_points.push_back(std::move(pt));
    }
  }
  return report;
}

/// z_1^{-(n+lambda-m)} V_{n+lambda}(z) for each n in n_list (all in Lambda_m).
template <Field F>
std::vector<F> scaled_denominator_limit(const RationalModel<F>& model, const DominantStructure& s,
                                        std::size_t m, const F& z,
                                        std::span<const std::size_t> n_list) {
  const std::size_t lambda = model.lambda();
  const ResidueClass cls{m, s.sigma, lambda};
  for (std::size_t n : n_list) {
    if (!cls.contains(n)) {
      throw Error(ErrorCode::kResidueClassMismatch,
                  "n = " + std::to_string(n) + " is not in Lambda_" + std::to_string(m));
    }
  }
  const BezoutSolver<F> solver(model);
  const F& z1 = model.pole(s.leading());
  std::vector<F> out;
  out.reserve(n_list.size());
  for (std::size_t n : n_list) {
    const auto sol = solver.solve(n + lambda);
    out.push_back(eval(sol.V, z) / power(z1, n + lambda - m));
  }
  return out;
}

/// (z - z_(nu+1)) ... (z - z_lambda) omega_m(z), the limit of the scaled
/// denominators along Lambda_m.
template <Field F>
F scaled_limit_value(const RationalModel<F>& model, const DominantStructure& s,
                     const OmegaFamily<F>& omegas, std::size_t m, const F& z) {
  F out = eval(omegas.polys.at(m), z);
  for (std::size_t j : s.nondominant()) out *= z - model.pole(j);
  return out;
}

}  // namespace padelimit

#endif  // PADELIMIT_ROW_ANALYSIS_HPP_
