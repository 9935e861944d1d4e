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

#ifndef PADELIMIT_ROOTS_HPP_
#define PADELIMIT_ROOTS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "padelimit/error.hpp"
#include "padelimit/poly.hpp"
#include "padelimit/scalar.hpp"

namespace padelimit {

struct RootOptions {
  double rel_tol = 1e-12;
  int max_iterations = 200;
  // Float-mode roots closer than this (relative to max(1, |z|)) are merged
  // into one root with multiplicity.
  double cluster_tol = 1e-6;
};

struct Root {
  Complex value;
  std::optional<GaussianRational> exact;
  int multiplicity = 1;
};

namespace detail {

inline bool complex_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

inline void sort_roots(std::vector<Root>& roots) {
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    return complex_less(a.value, b.value);
  });
}

struct HornerResult {
  Complex p;
  Complex dp;
  double bound;  // sum |a_i| |z|^i, the rounding-error scale of p
};

inline HornerResult horner(std::span<const Complex> a, const Complex& z) {
  Complex p = a.back();
  Complex dp(0.0, 0.0);
  double bound = std::abs(a.back());
  const double r = std::abs(z);
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[i];
    bound = bound * r + std::abs(a[i]);
  }
  return {p, dp, bound};
}

/// Best continued-fraction convergent within tol of x, if one exists with a
/// denominator below max_den.
inline std::optional<Rational> rationalize(double x, double tol,
                                           std::int64_t max_den = 1'000'000'000) {
  if (!std::isfinite(x)) return std::nullopt;
  if (std::fabs(x) <= tol) return Rational(0);
  if (std::fabs(x) > 1e12) return std::nullopt;
  std::int64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double y = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double fl = std::floor(y);
    const double span =
        static_cast<double>(std::max<std::int64_t>(std::llabs(h1), k1));
    if (std::fabs(fl) * span > 4e18 || std::fabs(fl) > 4e18) break;
    const auto a = static_cast<std::int64_t>(fl);
    const std::int64_t h2 = a * h1 + h0;
    const std::int64_t k2 = a * k1 + k0;
    if (k2 > max_den || k2 <= 0) break;
    if (std::fabs(x - static_cast<double>(h2) / static_cast<double>(k2)) <= tol) {
      Rational q(mpz_class(static_cast<long>(h2)), mpz_class(static_cast<long>(k2)));
      q.canonicalize();
      return q;
    }
    const double frac = y - fl;
    if (frac == 0.0) break;
    y = 1.0 / frac;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
  }
  return std::nullopt;
}

// Yun's square-free decomposition of a monic exact polynomial: returns
// (factor, multiplicity) pairs with f = prod factor^multiplicity.
inline std::vector<std::pair<Poly<GaussianRational>, int>> square_free(
    const Poly<GaussianRational>& f) {
  using P = Poly<GaussianRational>;
  std::vector<std::pair<P, int>> out;
  const P fp = derivative(f);
  const P a = gcd(f, fp);
  P b = divmod(f, a).quotient;
  P c = divmod(fp, a).quotient;
  P d = c - derivative(b);
  for (int i = 1; b.degree() > 0; ++i) {
    P ai = d.is_zero() ? b.monic() : gcd(b, d);
    b = divmod(b, ai).quotient;
    c = divmod(d, ai).quotient;
    d = c - derivative(b);
    if (ai.degree() > 0) out.emplace_back(std::move(ai), i);
  }
  return out;
}

}  // namespace detail

/// Every root of the polynomial with the given coefficients (index i
/// multiplies z^i), one entry per root counted with multiplicity.
/// Aberth-Ehrlich iteration followed by Newton polishing.
inline std::vector<Complex> aberth_roots(std::span<const Complex> coeffs,
                                         const RootOptions& opt = {}) {
  std::size_t lo = 0;
  while (lo < coeffs.size() && coeffs[lo] == Complex(0.0, 0.0)) ++lo;
  if (lo == coeffs.size()) {
    throw Error(ErrorCode::kInvalidArgument, "roots of the zero polynomial");
  }
  std::vector<Complex> roots(lo, Complex(0.0, 0.0));

  std::vector<Complex> a(coeffs.begin() + static_cast<std::ptrdiff_t>(lo), coeffs.end());
  while (a.size() > 1 && a.back() == Complex(0.0, 0.0)) a.pop_back();
  const std::size_t n = a.size() - 1;
  if (n == 0) return roots;
  const Complex lead = a.back();
  for (auto& c : a) c /= lead;
  for (const auto& c : a) check_finite(c, "root finding input");
  if (n == 1) {
    roots.push_back(-a[0]);
    return roots;
  }

  // Start on a circle whose radius is the geometric mean of the root moduli.
  double radius = std::pow(std::abs(a[0]), 1.0 / static_cast<double>(n));
  if (!(radius > 0.0) || !std::isfinite(radius)) radius = 1.0;
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                             static_cast<double>(n) + 0.7;
    z[k] = std::polar(radius, angle);
  }

  constexpr double kEps = std::numeric_limits<double>::epsilon();
  std::vector<bool> done(n, false);
  std::size_t remaining = n;
  for (int iter = 0; iter < opt.max_iterations && remaining > 0; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const auto h = detail::horner(a, z[i]);
      if (std::abs(h.p) <= 8.0 * kEps * h.bound) {
        done[i] = true;
        --remaining;
        continue;
      }
      Complex sum(0.0, 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        Complex diff = z[i] - z[j];
        if (diff == Complex(0.0, 0.0)) diff = Complex(kEps, kEps) * (1.0 + std::abs(z[i]));
        sum += 1.0 / diff;
      }
      const Complex ratio = (h.dp == Complex(0.0, 0.0))
                                ? Complex(kEps * (1.0 + std::abs(z[i])), 0.0)
                                : h.p / h.dp;
      const Complex w = ratio / (1.0 - ratio * sum);
      z[i] -= w;
      if (std::abs(w) <= opt.rel_tol * std::max(std::abs(z[i]), kEps)) {
        done[i] = true;
        --remaining;
      }
    }
  }
  if (remaining > 0) {
    throw Error(ErrorCode::kNonConvergence,
                "Aberth iteration did not converge for " + std::to_string(remaining) +
                    " of " + std::to_string(n) + " roots");
  }

  for (auto& r : z) {
    for (int step = 0; step < 3; ++step) {
      const auto h = detail::horner(a, r);
      if (h.dp == Complex(0.0, 0.0) || h.p == Complex(0.0, 0.0)) break;
      const Complex next = r - h.p / h.dp;
      if (std::abs(detail::horner(a, next).p) >= std::abs(h.p)) break;
      r = next;
    }
    check_finite(r, "root finding");
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

/// Individual root positions (no clustering), for tracking how roots move.
template <Field F>
std::vector<Complex> root_positions(const Poly<F>& p, const RootOptions& opt = {}) {
  if (p.degree() < 1) return {};
  auto v = to_complex(p.monic());
  auto out = aberth_roots(v.coeffs(), opt);
  std::sort(out.begin(), out.end(), detail::complex_less);
  return out;
}

/// Float mode: numeric roots, clustered into multiplicities.
inline std::vector<Root> find_roots(const Poly<Complex>& p, const RootOptions& opt = {}) {
  if (p.degree() < 1) {
    throw Error(ErrorCode::kInvalidArgument, "root finding needs degree >= 1");
  }
  auto raw = aberth_roots(p.coeffs(), opt);
  std::sort(raw.begin(), raw.end(), detail::complex_less);
  std::vector<Root> out;
  std::vector<bool> used(raw.size(), false);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (used[i]) continue;
    Complex sum = raw[i];
    int count = 1;
    used[i] = true;
    for (std::size_t j = i + 1; j < raw.size(); ++j) {
      if (used[j]) continue;
      const double tol = opt.cluster_tol * std::max(1.0, std::abs(raw[i]));
      if (std::abs(raw[j] - raw[i]) <= tol) {
        used[j] = true;
        sum += raw[j];
        ++count;
      }
    }
    out.push_back({sum / static_cast<double>(count), std::nullopt, count});
  }
  detail::sort_roots(out);
  return out;
}

/// Exact mode: multiplicities come from an exact square-free decomposition;
/// each square-free factor's numeric roots are rationalized and confirmed by
/// exact evaluation, so rational (and Gaussian-rational) roots are returned
/// exactly. Whatever cannot be confirmed stays numeric.
inline std::vector<Root> find_roots(const Poly<GaussianRational>& p,
                                    const RootOptions& opt = {}) {
  using GR = GaussianRational;
  using P = Poly<GR>;
  if (p.degree() < 1) {
    throw Error(ErrorCode::kInvalidArgument, "root finding needs degree >= 1");
  }
  std::vector<Root> out;
  P f = p.monic();

  int zero_mult = 0;
  while (f.degree() > 0 && f[0].is_zero()) {
    f = divmod(f, P::monomial(1)).quotient;
    ++zero_mult;
  }
  if (zero_mult > 0) out.push_back({Complex(0.0, 0.0), GR(0), zero_mult});

  if (f.degree() > 0) {
    for (auto& [factor, mult] : detail::square_free(f)) {
      P rest = factor.monic();
      const auto approx = root_positions(rest, opt);
      for (const auto& x : approx) {
        if (rest.degree() < 1) break;
        const double tol = 1e-9 * std::max(1.0, std::abs(x));
        auto re = detail::rationalize(x.real(), tol);
        auto im = detail::rationalize(x.imag(), tol);
        if (!re || !im) continue;
        GR cand(*re, *im);
        if (!eval(rest, cand).is_zero()) continue;
        rest = divmod(rest, P::linear(cand)).quotient;
        out.push_back({to_complex(cand), std::move(cand), mult});
      }
      if (rest.degree() >= 1) {
        for (const auto& x : root_positions(rest, opt)) {
          out.push_back({x, std::nullopt, mult});
        }
      }
    }
  }
  detail::sort_roots(out);
  return out;
}

}  // namespace padelimit

#endif  // PADELIMIT_ROOTS_HPP_
