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

#ifndef PADELIMIT_POLY_HPP_
#define PADELIMIT_POLY_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "padelimit/error.hpp"
#include "padelimit/scalar.hpp"

namespace padelimit {

// Dense univariate polynomial; coeffs()[i] multiplies z^i. The leading
// coefficient is never an exact zero, and the zero polynomial has no
// coefficients at all (degree -1).
template <Field F>
class Poly {
 public:
  using value_type = F;

  Poly() = default;
  Poly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(F c) { return Poly(std::vector<F>{std::move(c)}); }

  static Poly monomial(std::size_t k, F c = F(1)) {
    std::vector<F> v(k + 1, F(0));
    v[k] = std::move(c);
    return Poly(std::move(v));
  }

  /// z - a
  static Poly linear(const F& a) { return Poly({F(-a), F(1)}); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::size_t size() const noexcept { return c_.size(); }

  const F& operator[](std::size_t i) const { return c_[i]; }

  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }
  const F& leading() const { return c_.back(); }
  std::span<const F> coeffs() const noexcept { return c_; }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  Poly& operator*=(const F& s) {
    if (is_zero_scalar(s)) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const F& s) { return a *= s; }
  friend Poly operator*(const F& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> out(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero_scalar(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        out[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// this * z^k
  Poly shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<F> v(k, F(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    const F inv = F(1) / leading();
    return *this * inv;
  }

 private:
  static bool is_zero_scalar(const F& s) { return padelimit::is_zero(s); }

  void trim() {
    while (!c_.empty() && is_zero_scalar(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

template <Field F>
struct DivMod {
  Poly<F> quotient;
  Poly<F> remainder;
};

namespace detail {

// Float remainders carry rounding noise in the coefficients that should have
// cancelled; anything below tol * scale is dropped from the top.
template <Field F>
Poly<F> chop_leading(const Poly<F>& p, double scale, double tol) {
  if constexpr (is_exact_v<F>) {
    return p;
  } else {
    std::vector<F> v(p.coeffs().begin(), p.coeffs().end());
    while (!v.empty() && std::abs(v.back()) <= tol * scale) v.pop_back();
    return Poly<F>(std::move(v));
  }
}

template <Field F>
double max_abs_coeff(const Poly<F>& p) {
  double m = 0.0;
  for (const auto& c : p.coeffs()) m = std::max(m, abs_value(c));
  return m;
}

}  // namespace detail

/// a = b * quotient + remainder with deg(remainder) < deg(b).
template <Field F>
DivMod<F> divmod(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) {
    throw Error(ErrorCode::kDivisionByZeroPoly, "divisor is the zero polynomial");
  }
  if (a.degree() < b.degree()) return {Poly<F>(), a};

  std::vector<F> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const std::size_t dq = static_cast<std::size_t>(a.degree()) - db;
  std::vector<F> quo(dq + 1, F(0));
  const F inv_lead = F(1) / b.leading();
  for (std::size_t step = dq + 1; step-- > 0;) {
    F q = rem[step + db] * inv_lead;
    if (!is_zero(q)) {
      for (std::size_t i = 0; i <= db; ++i) rem[step + i] -= q * b[i];
    }
    // The top coefficient is zero by construction; force it so float noise
    // cannot leave a spurious leading term.
    rem[step + db] = F(0);
    quo[step] = std::move(q);
  }
  rem.resize(db);
  return {Poly<F>(std::move(quo)), Poly<F>(std::move(rem))};
}

template <Field F>
Poly<F> mod(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).remainder;
}

template <Field F>
struct ExtGcd {
  Poly<F> g;  // monic gcd
  Poly<F> p;  // a*p + b*q = g
  Poly<F> q;
};

/// Extended Euclid. In float mode remainders are chopped at 1e-12 relative
/// to the input scale, so near-common factors are treated as common.
template <Field F>
ExtGcd<F> ext_gcd(const Poly<F>& a, const Poly<F>& b) {
  if (a.is_zero() && b.is_zero()) {
    throw Error(ErrorCode::kInvalidArgument, "gcd of two zero polynomials");
  }
  const double scale =
      std::max(detail::max_abs_coeff(a), detail::max_abs_coeff(b));
  constexpr double kChop = 1e-12;

  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::constant(F(1)), s1;
  Poly<F> t0, t1 = Poly<F>::constant(F(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r = detail::chop_leading(r, scale, kChop);
    Poly<F> s2 = s0 - q * s1;
    Poly<F> t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const F inv = F(1) / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

template <Field F>
Poly<F> gcd(const Poly<F>& a, const Poly<F>& b) {
  return ext_gcd(a, b).g;
}

/// Horner evaluation.
template <Field F>
F eval(const Poly<F>& p, const F& z) {
  F acc(0);
  for (std::size_t i = p.size(); i-- > 0;) {
    acc *= z;
    acc += p[i];
  }
  return acc;
}

/// Exact point into a float polynomial.
inline Complex eval(const Poly<Complex>& p, const GaussianRational& z) {
  return eval(p, to_complex(z));
}

template <Field F>
Poly<F> derivative(const Poly<F>& p) {
  if (p.degree() < 1) return {};
  std::vector<F> v;
  v.reserve(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) v.push_back(p[i] * F(static_cast<long>(i)));
  return Poly<F>(std::move(v));
}

/// prod_j (z - roots_j), monic.
template <Field F>
Poly<F> from_roots(std::span<const F> roots) {
  Poly<F> out = Poly<F>::constant(F(1));
  for (const auto& r : roots) out *= Poly<F>::linear(r);
  return out;
}

inline Poly<Complex> to_complex(const Poly<GaussianRational>& p) {
  std::vector<Complex> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.push_back(to_complex(c));
  return Poly<Complex>(std::move(v));
}

inline Poly<Complex> to_complex(const Poly<Complex>& p) { return p; }

template <Field F>
Poly<F> from_exact(const Poly<GaussianRational>& p) {
  std::vector<F> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.push_back(from_exact<F>(c));
  return Poly<F>(std::move(v));
}

inline std::string to_string(const Poly<GaussianRational>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(p[i]) + ")";
    if (i > 0) out += "*z^" + std::to_string(i);
  }
  return out;
}

}  // namespace padelimit

#endif  // PADELIMIT_POLY_HPP_
