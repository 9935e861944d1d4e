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

#ifndef PADELIMIT_MODEL_HPP_
#define PADELIMIT_MODEL_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padelimit/error.hpp"
#include "padelimit/poly.hpp"
#include "padelimit/roots.hpp"
#include "padelimit/scalar.hpp"

namespace padelimit {

template <Field F>
struct Pole {
  F location;
  F residue;
};

/// Strictly proper r(z) = N(z)/D(z) with simple poles, held both as
/// pole/residue pairs (canonical) and as the coprime pair (N, D) with D monic.
template <Field F>
class RationalModel {
 public:
  static RationalModel from_partial_fractions(std::vector<Pole<F>> poles) {
    if (poles.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "a model needs at least one pole");
    }
    for (std::size_t i = 0; i < poles.size(); ++i) {
      if constexpr (!is_exact_v<F>) {
        check_finite(poles[i].location, "pole");
        check_finite(poles[i].residue, "residue");
      }
      if (is_zero(poles[i].residue)) {
        throw Error(ErrorCode::kZeroResidue, "residue " + std::to_string(i) + " is zero");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (same_point(poles[i].location, poles[j].location)) {
          throw Error(ErrorCode::kDuplicatePole, "poles " + std::to_string(j) + " and " +
                                                     std::to_string(i) + " coincide");
        }
      }
    }
    RationalModel m;
    m.poles_ = std::move(poles);
    m.den_ = Poly<F>::constant(F(1));
    for (const auto& p : m.poles_) m.den_ *= Poly<F>::linear(p.location);
    for (std::size_t j = 0; j < m.poles_.size(); ++j) {
      m.num_ += m.cofactor(j) * m.poles_[j].residue;
    }
    return m;
  }

  static RationalModel from_num_den(Poly<F> num, Poly<F> den) {
    if (den.is_zero()) {
      throw Error(ErrorCode::kDivisionByZeroPoly, "denominator is the zero polynomial");
    }
    if (num.is_zero()) {
      throw Error(ErrorCode::kInvalidArgument, "r(z) = 0 has no poles");
    }
    const Poly<F> g = gcd(num, den);
    if (g.degree() > 0) {
      num = divmod(num, g).quotient;
      den = divmod(den, g).quotient;
    }
    const F inv = F(1) / den.leading();
    num *= inv;
    den *= inv;
    if (num.degree() >= den.degree()) {
      throw Error(ErrorCode::kNotStrictlyProper,
                  "deg N = " + std::to_string(num.degree()) +
                      " is not below deg D = " + std::to_string(den.degree()));
    }

    const Poly<F> dden = derivative(den);
    std::vector<Pole<F>> poles;
    for (const auto& root : find_roots(den)) {
      if (root.multiplicity > 1) {
        throw Error(ErrorCode::kMultiplePole,
                    "denominator root of multiplicity " + std::to_string(root.multiplicity));
      }
      F z;
      if constexpr (is_exact_v<F>) {
        if (!root.exact) {
          throw Error(ErrorCode::kIrrationalPole,
                      "pole near (" + std::to_string(root.value.real()) + ", " +
                          std::to_string(root.value.imag()) +
                          ") is not a Gaussian rational; use float mode");
        }
        z = *root.exact;
      } else {
        z = root.value;
      }
      F residue = eval(num, z) / eval(dden, z);
      poles.push_back({std::move(z), std::move(residue)});
    }
    RationalModel m;
    m.poles_ = std::move(poles);
    m.num_ = std::move(num);
    m.den_ = std::move(den);
    return m;
  }

  const Poly<F>& numerator() const noexcept { return num_; }
  const Poly<F>& denominator() const noexcept { return den_; }
  std::size_t lambda() const noexcept { return poles_.size(); }
  const std::vector<Pole<F>>& poles() const noexcept { return poles_; }
  const F& pole(std::size_t j) const { return poles_.at(j).location; }
  const F& residue(std::size_t j) const { return poles_.at(j).residue; }

  /// max |z_j| + 1; every pole lies strictly inside this radius.
  double pole_radius_bound() const {
    double r = 0.0;
    for (const auto& p : poles_) r = std::max(r, abs_value(p.location));
    return r + 1.0;
  }

  /// D_j(z) = D(z) / (z - z_j), built as the product over the other poles.
  Poly<F> cofactor(std::size_t j) const {
    Poly<F> out = Poly<F>::constant(F(1));
    for (std::size_t i = 0; i < poles_.size(); ++i) {
      if (i != j) out *= Poly<F>::linear(poles_[i].location);
    }
    return out;
  }

  /// Index of the pole equal to z (exact mode) or within 1e-12 of it.
  std::optional<std::size_t> pole_index(const F& z) const {
    for (std::size_t j = 0; j < poles_.size(); ++j) {
      if (same_point(z, poles_[j].location)) return j;
    }
    return std::nullopt;
  }

 private:
  RationalModel() = default;

  static bool same_point(const F& a, const F& b) {
    if constexpr (is_exact_v<F>) {
      return a == b;
    } else {
      return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a));
    }
  }

  std::vector<Pole<F>> poles_;
  Poly<F> num_;
  Poly<F> den_;
};

/// First `count` Maclaurin coefficients: A/(z - a) = -sum_i A z^i / a^(i+1).
template <Field F>
std::vector<F> taylor_coeffs(const RationalModel<F>& model, std::size_t count) {
  if (count == 0) {
    throw Error(ErrorCode::kInvalidArgument, "taylor_coeffs needs count >= 1");
  }
  for (const auto& p : model.poles()) {
    if (is_zero(p.location)) {
      throw Error(ErrorCode::kPoleAtOrigin, "r(z) has a pole at the origin");
    }
  }
  std::vector<F> out(count, F(0));
  for (const auto& p : model.poles()) {
    const F inv = F(1) / p.location;
    F term = -(p.residue * inv);
    for (std::size_t i = 0; i < count; ++i) {
      out[i] += term;
      term *= inv;
    }
  }
  return out;
}

template <Field F>
F eval_r(const RationalModel<F>& model, const F& z) {
  if (model.pole_index(z)) {
    throw Error(ErrorCode::kEvalAtPole, "r(z) evaluated at one of its poles");
  }
  F sum(0);
  for (const auto& p : model.poles()) sum += p.residue / (z - p.location);
  return sum;
}

}  // namespace padelimit

#endif  // PADELIMIT_MODEL_HPP_
