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

#ifndef PADELIMIT_BEZOUT_HPP_
#define PADELIMIT_BEZOUT_HPP_

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "padelimit/error.hpp"
#include "padelimit/model.hpp"
#include "padelimit/poly.hpp"
#include "padelimit/scalar.hpp"

namespace padelimit {

/// The minimal solution of N V_k + D U_k = z^k, deg V_k < lambda.
template <Field F>
struct BezoutSolution {
  std::size_t k = 0;
  Poly<F> V;
  Poly<F> U;
};

// Holds N^{-1} mod D from one extended-Euclid run; every V_k is then
// (z^k mod D) * N^{-1} mod D. Immutable after construction.
template <Field F>
class BezoutSolver {
 public:
  explicit BezoutSolver(const RationalModel<F>& model)
      : num_(model.numerator()), den_(model.denominator()) {
    const auto eg = ext_gcd(num_, den_);
    if (eg.g.degree() != 0) {
      throw Error(ErrorCode::kInternalInconsistency, "N and D are not coprime");
    }
    inverse_ = mod(eg.p, den_);
  }

  BezoutSolution<F> solve(std::size_t k) const {
    Poly<F> V = mod(power_of_z_mod_den(k) * inverse_, den_);
    const Poly<F> target = Poly<F>::monomial(k) - num_ * V;
    auto [U, rem] = divmod(target, den_);
    if constexpr (is_exact_v<F>) {
      if (!rem.is_zero()) {
        throw Error(ErrorCode::kInternalInconsistency,
                    "z^k - N V_k is not divisible by D for k = " + std::to_string(k));
      }
    } else {
      const double scale = std::max(1.0, detail::max_abs_coeff(target));
      if (detail::max_abs_coeff(rem) > 1e-8 * scale) {
        throw Error(ErrorCode::kInternalInconsistency,
                    "Bezout remainder too large for k = " + std::to_string(k));
      }
    }
    return {k, std::move(V), std::move(U)};
  }

  /// (V_k, U_k) -> (V_{k+1}, U_{k+1}) via V_{k+1} = z V_k - v_k D and
  /// U_{k+1} = z U_k + v_k N, where v_k is the z^(lambda-1) coefficient of
  /// V_k. Both identities preserve N V + D U = z^k exactly.
  void step(BezoutSolution<F>& s) const {
    const F v = s.V.coeff(lambda() - 1);
    s.V = s.V.shifted(1) - den_ * v;
    s.U = s.U.shifted(1) + num_ * v;
    ++s.k;
  }

  std::size_t lambda() const noexcept { return static_cast<std::size_t>(den_.degree()); }
  const Poly<F>& inverse_of_numerator() const noexcept { return inverse_; }

 private:
  Poly<F> power_of_z_mod_den(std::size_t k) const {
    Poly<F> result = mod(Poly<F>::constant(F(1)), den_);
    Poly<F> base = mod(Poly<F>::monomial(1), den_);
    while (k > 0) {
      if (k & 1U) result = mod(result * base, den_);
      k >>= 1U;
      if (k > 0) base = mod(base * base, den_);
    }
    return result;
  }

  Poly<F> num_;
  Poly<F> den_;
  Poly<F> inverse_;
};

template <Field F>
BezoutSolution<F> minimal_bezout(const RationalModel<F>& model, std::size_t k) {
  return BezoutSolver<F>(model).solve(k);
}

/// C_j = 1 / (D_j(z_j)^2 A_j), one per pole, in model order.
template <Field F>
std::vector<F> c_constants(const RationalModel<F>& model) {
  const auto& poles = model.poles();
  std::vector<F> out;
  out.reserve(poles.size());
  for (std::size_t j = 0; j < poles.size(); ++j) {
    F dj(1);
    for (std::size_t i = 0; i < poles.size(); ++i) {
      if (i != j) dj *= poles[j].location - poles[i].location;
    }
    out.push_back(F(1) / (dj * dj * poles[j].residue));
  }
  return out;
}

/// v_k0, ..., v_{k0+count-1} with v_k = sum_j C_j z_j^k.
template <Field F>
std::vector<F> v_sequence(const RationalModel<F>& model, std::span<const F> C,
                          std::size_t k0, std::size_t count) {
  const auto& poles = model.poles();
  std::vector<F> powers;
  powers.reserve(poles.size());
  for (const auto& p : poles) powers.push_back(power(p.location, k0));
  std::vector<F> out;
  out.reserve(count);
  for (std::size_t step = 0; step < count; ++step) {
    F v(0);
    for (std::size_t j = 0; j < poles.size(); ++j) {
      v += C[j] * powers[j];
      powers[j] *= poles[j].location;
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// V_k = sum_j C_j z_j^k D_j(z).
template <Field F>
Poly<F> v_k_closed_form(const RationalModel<F>& model, std::span<const F> C, std::size_t k) {
  Poly<F> out;
  for (std::size_t j = 0; j < model.lambda(); ++j) {
    out += model.cofactor(j) * (C[j] * power(model.pole(j), k));
  }
  return out;
}

/// Assembles V_k = sum_{i=1..lambda} sum_{j=0..i-1} d_i v_{k+i-j-1} z^j from
/// v[0] = v_k, ..., v[lambda-1] = v_{k+lambda-1}; d_lambda = 1.
template <Field F>
Poly<F> v_k_from_v_sequence(const Poly<F>& den, std::span<const F> v) {
  const auto lambda = static_cast<std::size_t>(den.degree());
  if (v.size() < lambda) {
    throw Error(ErrorCode::kInvalidArgument, "need lambda consecutive v values");
  }
  std::vector<F> coeffs(lambda, F(0));
  for (std::size_t i = 1; i <= lambda; ++i) {
    const F& d = den[i];
    if (is_zero(d)) continue;
    for (std::size_t j = 0; j < i; ++j) coeffs[j] += d * v[i - j - 1];
  }
  return Poly<F>(std::move(coeffs));
}

template <Field F>
Poly<F> v_k_double_sum(const RationalModel<F>& model, std::size_t k) {
  const auto C = c_constants(model);
  const auto v = v_sequence<F>(model, C, k, model.lambda());
  return v_k_from_v_sequence<F>(model.denominator(), v);
}

/// pi_{n, lambda-1}(z) = num(z) / den(z).
template <Field F>
struct PadeApproximant {
  std::size_t n = 0;
  std::size_t den_bound = 0;  // lambda - 1
  Poly<F> num;
  Poly<F> den;

  /// True when deg num <= n and deg den <= lambda - 1. The Bezout pair leaves this
  /// class when n < lambda - 2, where deg U_{n+lambda} = lambda - 2.
  bool in_type_class() const {
    return num.degree() <= static_cast<int>(n) && den.degree() <= static_cast<int>(den_bound);
  }

  F operator()(const F& z) const {
    const F d = eval(den, z);
    if (is_zero(d)) {
      throw Error(ErrorCode::kEvalAtSingularity, "approximant denominator vanishes");
    }
    return eval(num, z) / d;
  }
};

/// Bezout route: num = -U_{n+lambda}, den = V_{n+lambda}.
template <Field F>
PadeApproximant<F> pade_from_bezout(const BezoutSolution<F>& s, std::size_t lambda) {
  if (s.V.is_zero()) {
    throw Error(ErrorCode::kDegenerateDenominator,
                "V_k vanishes identically for k = " + std::to_string(s.k));
  }
  return {s.k - lambda, lambda - 1, -s.U, s.V};
}

template <Field F>
PadeApproximant<F> pade(const RationalModel<F>& model, std::size_t n) {
  return pade_from_bezout(minimal_bezout(model, n + model.lambda()), model.lambda());
}

namespace detail {

// Solves A x = b for square A given as rows of the augmented matrix [A | b].
// Exact mode runs Bareiss fraction-free elimination; float mode uses the same
// recurrence with partial pivoting. Throws kSingularSystem.
template <Field F>
std::vector<F> solve_augmented(std::vector<std::vector<F>> a) {
  const std::size_t size = a.size();
  F prev(1);
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t pivot = size;
    if constexpr (is_exact_v<F>) {
      for (std::size_t r = k; r < size; ++r) {
        if (!is_zero(a[r][k])) {
          pivot = r;
          break;
        }
      }
    } else {
      double best = 0.0;
      double scale = 0.0;
      for (std::size_t r = k; r < size; ++r) {
        for (std::size_t c = k; c < size; ++c) scale = std::max(scale, std::abs(a[r][c]));
        if (std::abs(a[r][k]) > best) {
          best = std::abs(a[r][k]);
          pivot = r;
        }
      }
      if (best <= 1e-13 * scale) pivot = size;
    }
    if (pivot == size) {
      throw Error(ErrorCode::kSingularSystem, "Toeplitz system is singular");
    }
    std::swap(a[k], a[pivot]);
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j <= size; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = F(0);
    }
    prev = a[k][k];
  }
  std::vector<F> x(size, F(0));
  for (std::size_t i = size; i-- > 0;) {
    F acc = a[i][size];
    for (std::size_t j = i + 1; j < size; ++j) acc -= a[i][j] * x[j];
    x[i] = acc / a[i][i];
  }
  return x;
}

}  // namespace detail

/// Classical type-(n, lambda-1) Pade from Taylor coefficients: denominator
/// normalized to q_0 = 1 from the Toeplitz system
///   sum_{i=1..M} q_i c_{k-i} = -c_k,  k = n+1..n+M,  M = lambda-1,
/// numerator by truncated convolution. Independent of the Bezout route.
template <Field F>
PadeApproximant<F> toeplitz_pade_oracle(const RationalModel<F>& model, std::size_t n) {
  const std::size_t m = model.lambda() - 1;
  const auto c = taylor_coeffs(model, n + m + 1);
  auto coef = [&](std::ptrdiff_t i) { return i < 0 ? F(0) : c[static_cast<std::size_t>(i)]; };

  std::vector<F> q(m + 1, F(0));
  q[0] = F(1);
  if (m > 0) {
    std::vector<std::vector<F>> aug(m, std::vector<F>(m + 1, F(0)));
    for (std::size_t r = 0; r < m; ++r) {
      const auto k = static_cast<std::ptrdiff_t>(n + 1 + r);
      for (std::size_t i = 1; i <= m; ++i) aug[r][i - 1] = coef(k - static_cast<std::ptrdiff_t>(i));
      aug[r][m] = -coef(k);
    }
    const auto sol = detail::solve_augmented(std::move(aug));
    for (std::size_t i = 0; i < m; ++i) q[i + 1] = sol[i];
  }
  std::vector<F> p(n + 1, F(0));
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t i = 0; i <= std::min(j, m); ++i) p[j] += q[i] * c[j - i];
  }
  return {n, m, Poly<F>(std::move(p)), Poly<F>(std::move(q))};
}

/// Scales (num, den) so den is monic at its true degree.
template <Field F>
PadeApproximant<F> normalized(PadeApproximant<F> a) {
  if (a.den.is_zero()) {
    throw Error(ErrorCode::kDegenerateDenominator, "cannot normalize a zero denominator");
  }
  const F inv = F(1) / a.den.leading();
  a.num *= inv;
  a.den *= inv;
  return a;
}

/// Whether two (num, den) pairs agree up to a common scalar. Float mode
/// compares normalized coefficients with relative tolerance rel_tol.
template <Field F>
bool proportional(const PadeApproximant<F>& a, const PadeApproximant<F>& b,
                  double rel_tol = 1e-9) {
  const auto na = normalized(a);
  const auto nb = normalized(b);
  if constexpr (is_exact_v<F>) {
    return na.num == nb.num && na.den == nb.den;
  } else {
    auto close = [&](const Poly<F>& x, const Poly<F>& y) {
      const double scale = std::max({1.0, detail::max_abs_coeff(x), detail::max_abs_coeff(y)});
      const std::size_t len = std::max(x.size(), y.size());
      for (std::size_t i = 0; i < len; ++i) {
        if (std::abs(x.coeff(i) - y.coeff(i)) > rel_tol * scale) return false;
      }
      return true;
    };
    return close(na.num, nb.num) && close(na.den, nb.den);
  }
}

template <Field F>
struct IdentitySides {
  F lhs;  // r(z) - pi(z)
  F rhs;  // z^(n+lambda) / (D(z) V_{n+lambda}(z))
};

/// Both sides of r(z) - pi(z) = z^(n+lambda) / (D(z) V_{n+lambda}(z)).
template <Field F>
IdentitySides<F> residual_identity(const RationalModel<F>& model,
                                   const PadeApproximant<F>& approx, const F& z) {
  if (model.pole_index(z)) {
    throw Error(ErrorCode::kEvalAtSingularity, "z is a pole of r");
  }
  const F vz = eval(approx.den, z);
  if (is_zero(vz)) {
    throw Error(ErrorCode::kEvalAtSingularity, "z is a zero of V_{n+lambda}");
  }
  F lhs = eval_r(model, z) - eval(approx.num, z) / vz;
  F rhs = power(z, approx.n + model.lambda()) / (eval(model.denominator(), z) * vz);
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace padelimit

#endif  // PADELIMIT_BEZOUT_HPP_
