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

#include <random>
#include <vector>

#include "padelimit/bezout.hpp"
#include "test_support.hpp"

namespace padelimit {
namespace {

using testing::ExactModel;
using testing::GR;
using testing::poly;
using testing::q;

TEST(BezoutTest, ExampleOneDenominators) {
  const auto m = testing::example1();
  const BezoutSolver<GR> solver(m);
  EXPECT_EQ(solver.solve(3).V, poly({"-31/18", "7/2", "-7/9"}));
  EXPECT_EQ(solver.solve(4).V, poly({"7/18", "-5/2", "28/9"}));
  EXPECT_EQ(solver.solve(5).V, poly({"-14/9", "7/2", "-17/18"}));
  EXPECT_EQ(solver.solve(6).V, poly({"17/36", "-5/2", "109/36"}));
  EXPECT_EQ(solver.solve(7).V, poly({"-109/72", "7/2", "-71/72"}));
}

TEST(BezoutTest, IdentityAndDegreeBound) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    const auto m = testing::random_exact_model(rng);
    const BezoutSolver<GR> solver(m);
    for (std::size_t k = 0; k <= 20; ++k) {
      const auto s = solver.solve(k);
      EXPECT_EQ(m.numerator() * s.V + m.denominator() * s.U, Poly<GR>::monomial(k));
      EXPECT_LT(s.V.degree(), static_cast<int>(m.lambda()));
    }
  }
}

TEST(BezoutTest, StepperMatchesDirectSolve) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 20; ++t) {
    const auto m = testing::random_exact_model(rng);
    const BezoutSolver<GR> solver(m);
    auto s = solver.solve(0);
    for (std::size_t k = 1; k <= 25; ++k) {
      solver.step(s);
      const auto direct = solver.solve(k);
      EXPECT_EQ(s.V, direct.V);
      EXPECT_EQ(s.U, direct.U);
    }
  }
}

TEST(BezoutTest, CConstantsOfTheExamples) {
  using V = std::vector<GR>;
  EXPECT_EQ(c_constants(testing::example1()), (V{q("1"), q("2"), q("16/9")}));
  EXPECT_EQ(c_constants(testing::example2()), (V{q("1"), q("1/9"), q("16/9")}));
  EXPECT_EQ(c_constants(testing::example3()), (V{q("1/2"), q("3/2"), q("16/9")}));
  EXPECT_EQ(c_constants(testing::example4()), (V{q("3/2"), q("1/2"), q("16/9")}));
}

TEST(BezoutTest, LeadingCoefficientSequence) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 20; ++t) {
    const auto m = testing::random_exact_model(rng);
    const auto C = c_constants(m);
    const auto v = v_sequence<GR>(m, C, 0, 20);
    const BezoutSolver<GR> solver(m);
    for (std::size_t k = 0; k < v.size(); ++k) {
      EXPECT_EQ(solver.solve(k).V.coeff(m.lambda() - 1), v[k]);
    }
  }
}

TEST(BezoutTest, ThreeRoutesAgree) {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 20; ++t) {
    const auto m = testing::random_exact_model(rng);
    const auto C = c_constants(m);
    const BezoutSolver<GR> solver(m);
    for (std::size_t k = 0; k <= 15; ++k) {
      const auto euclid = solver.solve(k).V;
      EXPECT_EQ(v_k_closed_form<GR>(m, C, k), euclid);
      EXPECT_EQ(v_k_double_sum(m, k), euclid);
    }
  }
}

TEST(BezoutTest, FloatModeTracksExact) {
  const auto exact = testing::example1();
  const auto fl = testing::to_float(exact);
  const BezoutSolver<GR> es(exact);
  const BezoutSolver<Complex> fs(fl);
  for (std::size_t k = 0; k <= 30; ++k) {
    const auto e = to_complex(es.solve(k).V);
    const auto f = fs.solve(k).V;
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_NEAR(std::abs(e.coeff(i) - f.coeff(i)), 0.0, 1e-9 * std::max(1.0, std::abs(e.coeff(i))));
    }
  }
}

TEST(PadeTest, AgreesWithToeplitzOracleInTypeClass) {
  const auto m = testing::example1();
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto a = pade(m, n);
    EXPECT_TRUE(a.in_type_class());
    EXPECT_TRUE(proportional(a, toeplitz_pade_oracle(m, n))) << "n = " << n;
  }
}

TEST(PadeTest, BezoutPairLeavesTypeClassBelowLambdaMinusTwo) {
  const auto m = testing::exact_model({{"1", "1"}, {"-2", "1"}, {"3", "1"}, {"1/2", "1"}});
  for (std::size_t n = 0; n < 2; ++n) {
    const auto a = pade(m, n);
    EXPECT_EQ(a.num.degree(), 2);
    EXPECT_FALSE(a.in_type_class());
  }
  EXPECT_TRUE(pade(m, 2).in_type_class());
}

TEST(PadeTest, MaclaurinContactOrder) {
  std::mt19937_64 rng(35);
  for (int t = 0; t < 30; ++t) {
    const auto m = testing::random_exact_model(rng);
    for (std::size_t n = 0; n <= 8; ++n) {
      const auto a = pade(m, n);
      const std::size_t order = n + m.lambda();
      const auto c = taylor_coeffs(m, order);
      const auto err = a.num - a.den * Poly<GR>(c);
      for (std::size_t i = 0; i < order; ++i) EXPECT_TRUE(err.coeff(i).is_zero()) << i;
    }
  }
}

TEST(PadeTest, SingularToeplitzSystemIsReported) {
  // c_0 = -(1/1) - (-2/2) = 0 makes the type (0, 1) system singular.
  const auto m = testing::exact_model({{"1", "1"}, {"2", "-2"}});
  try {
    toeplitz_pade_oracle(m, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularSystem);
  }
  EXPECT_NO_THROW(pade(m, 0));
}

TEST(PadeTest, ResidualIdentityAtRandomPoints) {
  std::mt19937_64 rng(36);
  for (int t = 0; t < 20; ++t) {
    const auto m = testing::random_exact_model(rng);
    for (std::size_t n = 0; n <= 6; ++n) {
      const auto a = pade(m, n);
      for (int p = 0; p < 5; ++p) {
        const GR z = testing::random_rational(rng, -4, 4, 13);
        if (m.pole_index(z) || eval(a.den, z).is_zero()) continue;
        const auto sides = residual_identity(m, a, z);
        EXPECT_EQ(sides.lhs, sides.rhs);
      }
    }
  }
}

TEST(PadeTest, ExampleFourVanishesAtMinusOneHalf) {
  const auto m = testing::example4();
  for (std::size_t n = 1; n <= 21; n += 2) EXPECT_TRUE(pade(m, n)(q("-1/2")).is_zero());
  EXPECT_FALSE(pade(m, 2)(q("-1/2")).is_zero());
}

TEST(PadeTest, EvaluationAtAZeroOfTheDenominatorThrows) {
  const auto m = testing::example1();
  PadeApproximant<GR> a{0, 1, poly({"1"}), poly({"-1", "1"})};
  try {
    a(GR(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEvalAtSingularity);
  }
  EXPECT_EQ(pade(m, 1).den, poly({"7/18", "-5/2", "28/9"}));
}

}  // namespace
}  // namespace padelimit
