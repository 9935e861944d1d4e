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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "padelimit/poly.hpp"
#include "padelimit/roots.hpp"
#include "test_support.hpp"

namespace padelimit {
namespace {

using testing::GR;
using testing::ExactPoly;
using testing::poly;
using testing::q;

ExactPoly random_poly(std::mt19937_64& rng, int degree) {
  std::vector<GR> c;
  for (int i = 0; i <= degree; ++i) c.push_back(testing::random_rational(rng, -9, 9, 7));
  if (c.back().is_zero()) c.back() = GR(1);
  return ExactPoly(std::move(c));
}

TEST(ScalarTest, ParsesCanonicalFractions) {
  EXPECT_EQ(format_rational(parse_rational("6/8")), "3/4");
  EXPECT_EQ(format_rational(parse_rational("-4/5")), "-4/5");
  EXPECT_EQ(format_rational(parse_rational("0.25")), "1/4");
  EXPECT_EQ(format_rational(parse_rational("-.5")), "-1/2");
  EXPECT_EQ(format_rational(parse_rational("+7")), "7");
}

TEST(ScalarTest, RejectsMalformedText) {
  for (const char* bad : {"", "abc", "1/0", "1//2", " 1", "1/", "/2", "1.2.3", "1e3", "1/2.5"}) {
    try {
      parse_rational(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParseError) << bad;
    }
  }
}

TEST(ScalarTest, GaussianArithmetic) {
  const GR i(Rational(0), Rational(1));
  EXPECT_EQ((GR(1) + i) * (GR(1) - i), GR(2));
  EXPECT_EQ(i * i * i * i, GR(1));
  EXPECT_EQ(GR(1) / i, -i);
  EXPECT_EQ(to_string(GR(q("1/2").real(), Rational(-3))), "1/2-3i");
  EXPECT_EQ((GR(3) / GR(4)).norm(), Rational(9, 16));
}

TEST(ScalarTest, DivisionByZeroThrows) {
  try {
    (void)(GR(1) / GR(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionByZero);
  }
}

TEST(ScalarTest, LogAbsHandlesHugeValues) {
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 400);
  const Rational r(big, 3);
  EXPECT_NEAR(log_abs(r), 400 * std::log(10.0) - std::log(3.0), 1e-9);
  EXPECT_NEAR(log_abs(GR(Rational(3), Rational(4))), std::log(5.0), 1e-12);
}

TEST(PolyTest, TrimsAndReportsDegree) {
  EXPECT_EQ(ExactPoly{}.degree(), -1);
  EXPECT_EQ(poly({"1", "0", "0"}).degree(), 0);
  EXPECT_EQ((poly({"1", "2"}) - poly({"1", "2"})).degree(), -1);
  EXPECT_EQ(to_string(poly({"-1", "0", "1/2"})), "(1/2)*z^2 + (-1)");
}

TEST(PolyTest, DivModReconstructs) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_poly(rng, 1 + t % 9);
    const auto b = random_poly(rng, t % 5);
    const auto [quot, rem] = divmod(a, b);
    EXPECT_EQ(quot * b + rem, a);
    EXPECT_LT(rem.degree(), b.degree());
  }
}

TEST(PolyTest, DivModByZeroThrows) {
  try {
    divmod(poly({"1", "1"}), ExactPoly{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionByZeroPoly);
  }
}

TEST(PolyTest, ExtGcdCertificate) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const auto common = random_poly(rng, t % 3);
    const auto a = random_poly(rng, 1 + t % 6) * common;
    const auto b = random_poly(rng, 1 + t % 4) * common;
    const auto eg = ext_gcd(a, b);
    EXPECT_EQ(a * eg.p + b * eg.q, eg.g);
    EXPECT_EQ(eg.g.leading(), GR(1));
    EXPECT_TRUE(mod(a, eg.g).is_zero());
    EXPECT_TRUE(mod(b, eg.g).is_zero());
    EXPECT_GE(eg.g.degree(), common.degree());
  }
}

TEST(PolyTest, GcdOfSharedLinearFactor) {
  const auto a = poly({"2", "-3", "1"});   // (z-1)(z-2)
  const auto b = poly({"-3", "2", "1"});   // (z-1)(z+3)
  EXPECT_EQ(gcd(a, b), poly({"-1", "1"}));
  EXPECT_EQ(gcd(a, poly({"5"})), poly({"1"}));
}

TEST(PolyTest, HornerMatchesNaiveSum) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const auto p = random_poly(rng, t % 8);
    const GR z = testing::random_rational(rng, -4, 4, 5);
    GR naive(0);
    for (std::size_t i = 0; i < p.size(); ++i) naive += p[i] * power(z, i);
    EXPECT_EQ(eval(p, z), naive);
  }
}

TEST(PolyTest, DerivativeAndFromRoots) {
  const std::vector<GR> roots{q("1"), q("-1"), q("1/2")};
  const auto d = from_roots<GR>(roots);
  EXPECT_EQ(d, poly({"1/2", "-1", "-1/2", "1"}));
  EXPECT_EQ(derivative(d), poly({"-1", "-1", "3"}));
  for (const auto& r : roots) EXPECT_TRUE(eval(d, r).is_zero());
}

TEST(RootsTest, ExactRationalRoots) {
  const std::vector<GR> want{q("-2"), q("1/3"), q("3/2")};
  const auto roots = find_roots(from_roots<GR>(want) * GR(7));
  ASSERT_EQ(roots.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    ASSERT_TRUE(roots[i].exact.has_value());
    EXPECT_EQ(*roots[i].exact, want[i]);
    EXPECT_EQ(roots[i].multiplicity, 1);
  }
}

TEST(RootsTest, MultiplicitiesFromSquareFreeSplit) {
  const auto p = poly({"-1", "1"}) * poly({"-1", "1"}) * poly({"2", "1"});
  const auto roots = find_roots(p);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(*roots[0].exact, GR(-2));
  EXPECT_EQ(roots[0].multiplicity, 1);
  EXPECT_EQ(*roots[1].exact, GR(1));
  EXPECT_EQ(roots[1].multiplicity, 2);
}

TEST(RootsTest, GaussianAndIrrationalRoots) {
  const auto gaussian = find_roots(poly({"1", "0", "1"}));
  ASSERT_EQ(gaussian.size(), 2u);
  for (const auto& r : gaussian) {
    ASSERT_TRUE(r.exact.has_value());
    EXPECT_EQ(r.exact->norm(), Rational(1));
    EXPECT_EQ(sgn(r.exact->real()), 0);
  }
  const auto irrational = find_roots(poly({"-2", "0", "1"}));
  ASSERT_EQ(irrational.size(), 2u);
  for (const auto& r : irrational) {
    EXPECT_FALSE(r.exact.has_value());
    EXPECT_NEAR(std::abs(r.value), std::sqrt(2.0), 1e-14);
  }
}

TEST(RootsTest, AberthReexpansion) {
  std::mt19937_64 rng(14);
  std::normal_distribution<double> g;
  for (int t = 0; t < 50; ++t) {
    std::vector<Complex> want;
    const int degree = 1 + t % 12;
    for (int i = 0; i < degree; ++i) want.emplace_back(g(rng), g(rng));
    const auto p = from_roots<Complex>(want);
    const auto got = root_positions(p);
    ASSERT_EQ(got.size(), want.size());
    for (const auto& w : want) {
      double best = 1e300;
      for (const auto& z : got) best = std::min(best, std::abs(z - w));
      EXPECT_LT(best, 1e-8) << "degree " << degree;
    }
  }
}

TEST(RootsTest, FloatClustering) {
  const auto p = from_roots<Complex>(std::vector<Complex>{1.0, 1.0, -2.0});
  const auto roots = find_roots(p);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[1].multiplicity, 2);
  EXPECT_NEAR(roots[1].value.real(), 1.0, 1e-7);
}

TEST(RootsTest, ConstantHasNoRoots) {
  EXPECT_THROW(find_roots(poly({"3"})), Error);
  EXPECT_TRUE(root_positions(poly({"3"})).empty());
}

}  // namespace
}  // namespace padelimit
