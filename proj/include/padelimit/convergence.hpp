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

#ifndef PADELIMIT_CONVERGENCE_HPP_
#define PADELIMIT_CONVERGENCE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
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
#include "padelimit/row_analysis.hpp"
#include "padelimit/scalar.hpp"

namespace padelimit {

// |pi| above this multiple of |r(zeta)| (or absolute, when r(zeta) = 0)
// counts as empirical divergence.
inline constexpr double kDivergenceFactor = 1e6;
inline constexpr std::size_t kMinEntriesPerClass = 10;

enum class Observed { kConvergesToR, kDivergesToInfinity, kNoLimit, kStationaryNotR };

constexpr std::string_view to_string(Observed o) noexcept {
  switch (o) {
    case Observed::kConvergesToR: return "ConvergesToR";
    case Observed::kDivergesToInfinity: return "DivergesToInfinity";
    case Observed::kNoLimit: return "NoLimit";
    case Observed::kStationaryNotR: return "Stationary-NotR";
  }
  return "?";
}

template <Field F>
struct TraceEntry {
  std::size_t n = 0;
  std::size_t m = 0;             // (n + lambda) mod sigma
  std::optional<F> value;        // nullopt: V_{n+lambda}(zeta) = 0, pi is infinite
  std::optional<F> deviation;    // r(zeta) - pi(zeta), when both are defined
  double log_error = std::numeric_limits<double>::quiet_NaN();  // log|deviation|
  std::optional<double> nearest_root_distance;  // zeta to the closest zero of V
  std::optional<bool> identity_holds;           // -U/V == r - z^k / (D V)

  bool infinite() const { return !value.has_value(); }
};

template <Field F>
struct SequenceTrace {
  F zeta;
  std::size_t lambda = 0;
  std::size_t sigma = 1;
  std::optional<F> r_at_zeta;
  std::optional<Verdict> prediction;
  std::vector<TraceEntry<F>> entries;
};

struct TraceOptions {
  std::size_t sigma = 1;
  bool with_roots = true;
  std::optional<Verdict> prediction;
};

/// pi_{n,lambda-1}(zeta) for n = 0..n_max, stepping the minimal Bezout
/// solution k -> k+1. Entries where V_{n+lambda}(zeta) = 0 are kept as
/// infinite values.
template <Field F>
SequenceTrace<F> evaluate_sequence(const RationalModel<F>& model, const F& zeta,
                                   std::size_t n_max, const TraceOptions& opt = {}) {
  if (n_max < 1) throw Error(ErrorCode::kInvalidArgument, "n_max must be >= 1");
  if (opt.sigma < 1) throw Error(ErrorCode::kInvalidArgument, "sigma must be >= 1");
  const std::size_t lambda = model.lambda();
  SequenceTrace<F> trace{zeta, lambda, opt.sigma, std::nullopt, opt.prediction, {}};
  if (!model.pole_index(zeta)) trace.r_at_zeta = eval_r(model, zeta);
  const F d_at_zeta = eval(model.denominator(), zeta);
  const Complex zeta_c = to_complex(zeta);

  const BezoutSolver<F> solver(model);
  auto sol = solver.solve(lambda);
  F zeta_pow = power(zeta, lambda);
  trace.entries.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    TraceEntry<F> e;
    e.n = n;
    e.m = (n + lambda) % opt.sigma;
    const F v = eval(sol.V, zeta);
    if (!is_zero(v)) {
      e.value = -eval(sol.U, zeta) / v;
      if (trace.r_at_zeta) {
        e.deviation = *trace.r_at_zeta - *e.value;
        e.log_error = log_abs(*e.deviation);
        const F via_identity = *trace.r_at_zeta - zeta_pow / (d_at_zeta * v);
        if constexpr (is_exact_v<F>) {
          e.identity_holds = via_identity == *e.value;
        } else {
          e.identity_holds = std::abs(via_identity - *e.value) <=
                             1e-9 * std::max(1.0, std::abs(*e.value));
        }
      }
    }
    if (opt.with_roots && sol.V.degree() >= 1) {
      try {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& root : root_positions(sol.V)) best = std::min(best, std::abs(root - zeta_c));
        e.nearest_root_distance = best;
      } catch (const Error&) {
        // left empty; the entry is still usable
      }
    }
    trace.entries.push_back(std::move(e));
    solver.step(sol);
    zeta_pow *= zeta;
  }
  return trace;
}

struct ClassBehavior {
  std::size_t m = 0;
  Observed behavior = Observed::kNoLimit;
  std::size_t samples = 0;
  bool omega_root = false;  // zeta is a zero of omega_m
  double fitted_ratio = std::numeric_limits<double>::quiet_NaN();  // per Lambda_m step
  std::optional<double> theoretical_ratio;
  std::optional<bool> ratio_consistent;  // within a factor 2 of theory
  bool threshold_exceeded = false;
};

struct ObservedClassification {
  Observed headline = Observed::kNoLimit;
  Observed whole_sequence = Observed::kNoLimit;
  std::vector<ClassBehavior> classes;
  std::optional<Verdict> predicted;
  std::optional<bool> match;
};

namespace detail {

template <Field F>
bool values_equal(const F& a, const F& b) {
  if constexpr (is_exact_v<F>) {
    return a == b;
  } else {
    return std::abs(a - b) <= 1e-12 * std::max(1.0, std::max(std::abs(a), std::abs(b)));
  }
}

template <Field F>
bool matches_point(const F& zeta, const Root& root) {
  if constexpr (is_exact_v<F>) {
    if (root.exact) return *root.exact == zeta;
  }
  const Complex z = to_complex(zeta);
  return std::abs(z - root.value) <= kModulusTol * std::max(1.0, std::abs(z));
}

inline bool accepts(Verdict predicted, Observed headline, Observed whole,
                    bool omega_classes_diverge) {
  switch (predicted) {
    case Verdict::kConverges:
      return headline == Observed::kConvergesToR;
    case Verdict::kDivergesToInfinity:
      return headline == Observed::kDivergesToInfinity && omega_classes_diverge;
    case Verdict::kNoLimitOnCircle:
      return whole == Observed::kNoLimit;
    default:
      return false;
  }
}

}  // namespace detail

/// Compares the observed behaviour of a trace with the prediction for zeta.
/// Per residue class: constant values that differ from r are Stationary;
/// |pi| past the divergence threshold or geometric error growth is
/// divergence; geometric error decay is convergence. The fitted per-step
/// error ratio is reported next to the theoretical one, (|zeta|/|z_(nu+1)|)^sigma
/// on classes where zeta is an omega_m zero and (|zeta|/rho)^sigma elsewhere.
template <Field F>
ObservedClassification classify_observed(const SequenceTrace<F>& trace,
                                         const RationalModel<F>& model,
                                         const LimitPointReport& report) {
  (void)model;
  const std::size_t sigma = trace.sigma;
  ObservedClassification out;

  std::vector<bool> omega_root(sigma, false);
  std::optional<Verdict> from_report;
  for (const auto& pt : report.additional_points) {
    if (detail::matches_point(trace.zeta, pt.zeta)) {
      if (pt.m < sigma) omega_root[pt.m] = true;
      if (!from_report) from_report = pt.verdict;
    }
  }
  out.predicted = trace.prediction ? trace.prediction : from_report;

  const double zeta_abs = abs_value(trace.zeta);
  double threshold = kDivergenceFactor;
  if (trace.r_at_zeta && !is_zero(*trace.r_at_zeta)) {
    threshold = kDivergenceFactor * abs_value(*trace.r_at_zeta);
  }

  for (std::size_t m = 0; m < sigma; ++m) {
    std::vector<const TraceEntry<F>*> cls;
    for (const auto& e : trace.entries) {
      if (e.m == m) cls.push_back(&e);
    }
    if (cls.size() < kMinEntriesPerClass) {
      throw Error(ErrorCode::kInsufficientData,
                  "residue class " + std::to_string(m) + " has " + std::to_string(cls.size()) +
                      " entries; need " + std::to_string(kMinEntriesPerClass));
    }
    const std::span<const TraceEntry<F>* const> tail(
        cls.data() + (cls.size() - kMinEntriesPerClass), kMinEntriesPerClass);

    ClassBehavior b;
    b.m = m;
    b.samples = cls.size();
    b.omega_root = omega_root[m];
    const double base = omega_root[m] ? report.threshold_modulus : report.rho;
    if (base > 0.0) b.theoretical_ratio = std::pow(zeta_abs / base, static_cast<double>(sigma));

    const auto* last = tail.back();
    b.threshold_exceeded = last->infinite() || abs_value(*last->value) > threshold;

    // Geometric rate of |error| (or |pi| when r(zeta) is undefined).
    auto log_size = [&](const TraceEntry<F>* e) {
      if (trace.r_at_zeta) return e->log_error;
      return e->infinite() ? std::numeric_limits<double>::quiet_NaN() : log_abs(*e->value);
    };
    const TraceEntry<F>* first_ok = nullptr;
    const TraceEntry<F>* last_ok = nullptr;
    bool all_exact_hits = trace.r_at_zeta.has_value();
    for (const auto* e : tail) {
      const double l = log_size(e);
      if (!(std::isinf(l) && l < 0)) all_exact_hits = false;
      if (!std::isfinite(l)) continue;
      if (!first_ok) first_ok = e;
      last_ok = e;
    }
    if (first_ok && last_ok && last_ok->n > first_ok->n) {
      const double steps = static_cast<double>(last_ok->n - first_ok->n) / static_cast<double>(sigma);
      b.fitted_ratio = std::exp((log_size(last_ok) - log_size(first_ok)) / steps);
      if (b.theoretical_ratio && *b.theoretical_ratio > 0.0) {
        b.ratio_consistent = b.fitted_ratio >= 0.5 * *b.theoretical_ratio &&
                             b.fitted_ratio <= 2.0 * *b.theoretical_ratio;
      }
    }

    bool stationary = trace.r_at_zeta.has_value();
    constexpr std::size_t kStationaryRun = 5;
    for (std::size_t i = tail.size() - kStationaryRun; i < tail.size() && stationary; ++i) {
      const auto* e = tail[i];
      if (e->infinite() || !e->deviation) {
        stationary = false;
      } else if (!detail::values_equal(*e->value, *tail.back()->value)) {
        stationary = false;
      } else if (detail::values_equal(*e->value, *trace.r_at_zeta)) {
        stationary = false;
      }
    }

    if (stationary) {
      b.behavior = Observed::kStationaryNotR;
    } else if (b.threshold_exceeded) {
      b.behavior = Observed::kDivergesToInfinity;
    } else if (all_exact_hits) {
      b.behavior = Observed::kConvergesToR;
    } else if (std::isfinite(b.fitted_ratio) && b.fitted_ratio < 1.0 - 1e-6) {
      b.behavior = trace.r_at_zeta ? Observed::kConvergesToR : Observed::kNoLimit;
    } else if (std::isfinite(b.fitted_ratio) && b.fitted_ratio > 1.0 + 1e-6) {
      b.behavior = Observed::kDivergesToInfinity;
    } else {
      b.behavior = Observed::kNoLimit;
    }
    out.classes.push_back(b);
  }

  auto all_are = [&](Observed o) {
    return std::all_of(out.classes.begin(), out.classes.end(),
                       [&](const ClassBehavior& c) { return c.behavior == o; });
  };
  auto any_is = [&](Observed o) {
    return std::any_of(out.classes.begin(), out.classes.end(),
                       [&](const ClassBehavior& c) { return c.behavior == o; });
  };
  if (all_are(Observed::kConvergesToR)) {
    out.whole_sequence = Observed::kConvergesToR;
  } else if (all_are(Observed::kDivergesToInfinity)) {
    out.whole_sequence = Observed::kDivergesToInfinity;
  } else {
    out.whole_sequence = Observed::kNoLimit;
  }
  if (any_is(Observed::kDivergesToInfinity)) {
    out.headline = Observed::kDivergesToInfinity;
  } else if (any_is(Observed::kStationaryNotR)) {
    out.headline = Observed::kStationaryNotR;
  } else {
    out.headline = out.whole_sequence;
  }

  if (out.predicted && *out.predicted != Verdict::kUnclassifiedCoincident) {
    bool omega_diverge = true;
    for (const auto& c : out.classes) {
      if (c.omega_root && c.behavior != Observed::kDivergesToInfinity) omega_diverge = false;
    }
    if (*out.predicted == Verdict::kBoundary) {
      out.match = detail::accepts(Verdict::kNoLimitOnCircle, out.headline, out.whole_sequence, omega_diverge) ||
                  detail::accepts(Verdict::kConverges, out.headline, out.whole_sequence, omega_diverge) ||
                  detail::accepts(Verdict::kDivergesToInfinity, out.headline, out.whole_sequence, omega_diverge);
    } else {
      out.match = detail::accepts(*out.predicted, out.headline, out.whole_sequence, omega_diverge);
    }
  }
  return out;
}

struct LimitTarget {
  std::string label;
  Complex point;
};

struct TrajectoryStep {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Complex> roots;  // zeros of V_{n+lambda}, i.e. poles of pi_n
  bool root_failure = false;
};

struct PoleTrajectory {
  std::vector<LimitTarget> targets;
  std::vector<TrajectoryStep> steps;
  // distances[t][i]: distance from targets[t] to the nearest root at steps[i].
  std::vector<std::vector<std::optional<double>>> distances;
};

/// Labelled predicted limit set: nondominant poles, then omega_m zeros.
template <Field F>
std::vector<LimitTarget> predicted_targets(const RationalModel<F>& model,
                                           const LimitPointReport& report) {
  auto label_of = [](const Complex& z, const std::optional<GaussianRational>& exact) {
    if (exact) return to_string(*exact);
    std::string im = std::to_string(z.imag());
    if (z.imag() >= 0) im = "+" + im;
    return std::to_string(z.real()) + im + "i";
  };
  std::vector<LimitTarget> out;
  for (std::size_t j : report.nondominant_poles) {
    std::optional<GaussianRational> exact;
    if constexpr (is_exact_v<F>) exact = model.pole(j);
    out.push_back({"pole:" + label_of(to_complex(model.pole(j)), exact), to_complex(model.pole(j))});
  }
  for (const auto& pt : report.additional_points) {
    out.push_back({"omega" + std::to_string(pt.m) + ":" + label_of(pt.zeta.value, pt.zeta.exact),
                   pt.zeta.value});
  }
  return out;
}

/// Zeros of V_{n+lambda} for n = 0..n_max (float root finding on the exact
/// coefficients), with the nearest-root distance to every target.
template <Field F>
PoleTrajectory pole_trajectory(const RationalModel<F>& model, std::size_t n_max,
                               std::vector<LimitTarget> targets, std::size_t sigma = 1) {
  const std::size_t lambda = model.lambda();
  if (n_max < lambda) {
    throw Error(ErrorCode::kInvalidArgument, "n_max must be >= lambda");
  }
  PoleTrajectory out;
  out.targets = std::move(targets);
  out.distances.assign(out.targets.size(), {});

  const BezoutSolver<F> solver(model);
  auto sol = solver.solve(lambda);
  for (std::size_t n = 0; n <= n_max; ++n) {
    TrajectoryStep step;
    step.n = n;
    step.m = (n + lambda) % sigma;
    try {
      step.roots = root_positions(sol.V);
    } catch (const Error&) {
      step.root_failure = true;
    }
    for (std::size_t t = 0; t < out.targets.size(); ++t) {
      std::optional<double> best;
      for (const auto& r : step.roots) {
        const double d = std::abs(r - out.targets[t].point);
        if (!best || d < *best) best = d;
      }
      out.distances[t].push_back(best);
    }
    out.steps.push_back(std::move(step));
    solver.step(sol);
  }
  return out;
}

template <Field F>
struct BracketRow {
  std::size_t n = 0;
  F deviation;  // V(zeta) z_(nu+1)^{-(n+lambda)} / D(zeta) - C_(nu+1) / (zeta - z_(nu+1))
  double log_abs_deviation = 0.0;
};

/// The bracket of V_{n+lambda}(zeta) = z_(nu+1)^(n+lambda) D(zeta) [C_(nu+1)/(zeta - z_(nu+1)) + o(1)]
/// at a zero zeta of omega_m; returns the o(1) term per n.
template <Field F>
std::vector<BracketRow<F>> bracket_deviation(const RationalModel<F>& model, const DominantStructure& s,
                                    std::span<const F> C, const F& zeta, std::size_t m,
                                    std::span<const std::size_t> n_list) {
  const std::size_t lambda = model.lambda();
  if (m >= s.sigma) throw Error(ErrorCode::kInvalidArgument, "m must be below sigma");

  F omega(0);
  double omega_scale = 0.0;
  for (std::size_t j : s.dominant()) {
    F term = C[j] * power(model.pole(j), m);
    for (std::size_t i : s.dominant()) {
      if (i != j) term *= zeta - model.pole(i);
    }
    omega_scale += abs_value(term);
    omega += term;
  }
  bool is_root;
  if constexpr (is_exact_v<F>) {
    is_root = is_zero(omega);
  } else {
    is_root = std::abs(omega) <= 1e-10 * std::max(1.0, omega_scale);
  }
  if (!is_root) {
    throw Error(ErrorCode::kNotAnOmegaRoot, "zeta is not a zero of omega_" + std::to_string(m));
  }

  const ResidueClass cls{m, s.sigma, lambda};
  for (std::size_t n : n_list) {
    if (!cls.contains(n)) {
      throw Error(ErrorCode::kResidueClassMismatch,
                  "n = " + std::to_string(n) + " is not in Lambda_" + std::to_string(m));
    }
  }
  const std::size_t sub = s.subdominant();
  const F& z_sub = model.pole(sub);
  const F d_zeta = eval(model.denominator(), zeta);
  if (model.pole_index(zeta) || is_zero(d_zeta)) {
    throw Error(ErrorCode::kEvalAtSingularity, "zeta is a pole of r");
  }
  const F leading_term = C[sub] / (zeta - z_sub);

  const BezoutSolver<F> solver(model);
  std::vector<BracketRow<F>> out;
  for (std::size_t n : n_list) {
    const auto sol = solver.solve(n + lambda);
    F dev = eval(sol.V, zeta) / (power(z_sub, n + lambda) * d_zeta) - leading_term;
    const double l = log_abs(dev);
    out.push_back({n, std::move(dev), l});
  }
  return out;
}

}  // namespace padelimit

#endif  // PADELIMIT_CONVERGENCE_HPP_
