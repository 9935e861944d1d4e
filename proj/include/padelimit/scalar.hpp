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

#ifndef PADELIMIT_SCALAR_HPP_
#define PADELIMIT_SCALAR_HPP_

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <concepts>
#include <limits>
#include <string>
#include <string_view>
#include <type_traits>

#include "padelimit/error.hpp"

namespace padelimit {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Parses "p", "p/q" or a plain decimal such as "-0.125" into a canonical
/// fraction. Throws ErrorCode::kParseError on anything else.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto fail = [&]() -> Rational {
    throw Error(ErrorCode::kParseError, "not a rational number: '" + s + "'");
  };
  if (s.empty()) return fail();
  if (s.front() == '+') s.erase(0, 1);
  if (s.empty()) return fail();

  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) return fail();
    std::string int_part = s.substr(0, dot);
    std::string frac_part = s.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && int_part.front() == '-') {
      negative = true;
      int_part.erase(0, 1);
    }
    if (int_part.empty() && frac_part.empty()) return fail();
    for (char c : int_part + frac_part) {
      if (c < '0' || c > '9') return fail();
    }
    mpz_class numer(int_part.empty() ? "0" : int_part, 10);
    mpz_class denom = 1;
    for (char c : frac_part) {
      numer = numer * 10 + (c - '0');
      denom *= 10;
    }
    Rational r(negative ? mpz_class(-numer) : numer, denom);
    r.canonicalize();
    return r;
  }

  // mpq's parser accepts leading whitespace and a few other oddities; only
  // digits, a single slash and a leading minus are allowed here.
  std::size_t i = (s.front() == '-') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '/') {
      if (seen_slash || !digit_before) return fail();
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      return fail();
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) return fail();

  Rational r;
  if (r.set_str(s, 10) != 0) return fail();
  if (r.get_den() == 0) {
    throw Error(ErrorCode::kParseError, "zero denominator in '" + s + "'");
  }
  r.canonicalize();
  return r;
}

inline std::string format_rational(const Rational& r) { return r.get_str(10); }

inline double to_double(const Rational& r) { return r.get_d(); }

/// Natural log of |r|, robust to magnitudes far outside the double range.
inline double log_abs(const Rational& r) {
  if (sgn(r) == 0) return -std::numeric_limits<double>::infinity();
  auto log_mpz = [](const mpz_class& z) {
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
  };
  return log_mpz(r.get_num()) - log_mpz(r.get_den());
}

// Element of Q(i). Real rationals are the common case, so every operation
// short-circuits when both imaginary parts vanish.
class GaussianRational {
 public:
  GaussianRational() = default;

  template <std::integral I>
  GaussianRational(I value) : re_(static_cast<long>(value)) {}  // NOLINT

  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT

  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& real() const noexcept { return re_; }
  const Rational& imag() const noexcept { return im_; }

  bool is_real() const noexcept { return sgn(im_) == 0; }
  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }

  /// |z|^2, exact.
  Rational norm() const {
    if (is_real()) return Rational(re_ * re_);
    return Rational(re_ * re_ + im_ * im_);
  }

  GaussianRational conj() const { return {re_, Rational(-im_)}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    if (!o.is_real()) im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    if (!o.is_real()) im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (is_real() && o.is_real()) {
      re_ *= o.re_;
      return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) {
      throw Error(ErrorCode::kDivisionByZero, "division by exact zero");
    }
    if (o.is_real()) {
      re_ /= o.re_;
      if (!is_real()) im_ /= o.re_;
      return *this;
    }
    const Rational n = o.norm();
    Rational re = (re_ * o.re_ + im_ * o.im_) / n;
    Rational im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) {
    return {Rational(-a.re_), Rational(-a.im_)};
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Canonical text: "p/q" for real values, "a+bi" style otherwise.
inline std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return format_rational(z.real());
  std::string out = sgn(z.real()) == 0 ? std::string() : format_rational(z.real());
  const Rational& im = z.imag();
  if (!out.empty() && sgn(im) > 0) out += "+";
  out += format_rational(im) + "i";
  return out;
}

template <class F>
struct scalar_traits;

template <>
struct scalar_traits<GaussianRational> {
  static constexpr bool exact = true;
  static constexpr std::string_view mode_name = "exact";
};

template <>
struct scalar_traits<Complex> {
  static constexpr bool exact = false;
  static constexpr std::string_view mode_name = "float";
};

/// The two coefficient fields every template in the library is instantiated
/// with: exact Gaussian rationals and complex doubles.
template <class F>
concept Field = std::same_as<F, GaussianRational> || std::same_as<F, Complex>;

template <Field F>
inline constexpr bool is_exact_v = scalar_traits<F>::exact;

inline bool is_zero(const GaussianRational& z) noexcept { return z.is_zero(); }
inline bool is_zero(const Complex& z) noexcept { return z == Complex(0.0, 0.0); }

inline Complex to_complex(const GaussianRational& z) {
  return {to_double(z.real()), to_double(z.imag())};
}
inline Complex to_complex(const Complex& z) noexcept { return z; }

inline double log_abs(const GaussianRational& z) {
  if (z.is_real()) return log_abs(z.real());
  return 0.5 * log_abs(z.norm());
}
inline double log_abs(const Complex& z) { return std::log(std::abs(z)); }

inline double abs_value(const GaussianRational& z) { return std::exp(log_abs(z)); }
inline double abs_value(const Complex& z) { return std::abs(z); }

inline bool is_finite(const Complex& z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline const Complex& check_finite(const Complex& z, std::string_view where) {
  if (!is_finite(z)) {
    throw Error(ErrorCode::kNonFinite, "non-finite value in " + std::string(where));
  }
  return z;
}

/// Converts an exact value into field F (identity for exact F).
template <Field F>
F from_exact(const GaussianRational& z) {
  if constexpr (is_exact_v<F>) {
    return z;
  } else {
    return to_complex(z);
  }
}

/// z^k by repeated squaring.
template <Field F>
F power(F base, std::size_t k) {
  F result(1);
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

/// Float-mode nearness; exact mode is plain equality.
template <Field F>
bool nearly_equal(const F& a, const F& b, double abs_tol) {
  if constexpr (is_exact_v<F>) {
    return a == b;
  } else {
    return std::abs(a - b) <= abs_tol;
  }
}

}  // namespace padelimit

#endif  // PADELIMIT_SCALAR_HPP_
