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

#ifndef PADELIMIT_TESTS_TEST_SUPPORT_HPP_
#define PADELIMIT_TESTS_TEST_SUPPORT_HPP_

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "padelimit/padelimit.hpp"

namespace padelimit::testing {

using GR = GaussianRational;
using ExactModel = RationalModel<GR>;
using ExactPoly = Poly<GR>;

inline GR q(const char* text) { return GR(parse_rational(text)); }

inline ExactPoly poly(std::initializer_list<const char*> coeffs) {
  std::vector<GR> c;
  for (const char* s : coeffs) c.push_back(q(s));
  return ExactPoly(std::move(c));
}

inline ExactModel exact_model(std::initializer_list<std::pair<const char*, const char*>> poles) {
  std::vector<Pole<GR>> p;
  for (const auto& [z, res] : poles) p.push_back({q(z), q(res)});
  return ExactModel::from_partial_fractions(std::move(p));
}

inline ExactModel example1() { return exact_model({{"1", "1"}, {"-1", "1/18"}, {"1/2", "1"}}); }
inline ExactModel example2() { return exact_model({{"1", "1"}, {"-1", "1"}, {"1/2", "1"}}); }
inline ExactModel example3() { return exact_model({{"1", "2"}, {"-1", "2/27"}, {"1/2", "1"}}); }
inline ExactModel example4() { return exact_model({{"1", "2/3"}, {"-1", "2/9"}, {"1/2", "1"}}); }

inline RationalModel<Complex> to_float(const ExactModel& m) {
  std::vector<Pole<Complex>> p;
  for (const auto& pole : m.poles()) p.push_back({to_complex(pole.location), to_complex(pole.residue)});
  return RationalModel<Complex>::from_partial_fractions(std::move(p));
}

inline GR random_rational(std::mt19937_64& rng, long lo, long hi, long max_den) {
  std::uniform_int_distribution<long> den(1, max_den);
  const long d = den(rng);
  std::uniform_int_distribution<long> num(lo * d, hi * d);
  Rational r(mpz_class(num(rng)), mpz_class(d));
  r.canonicalize();
  return GR(r);
}

// lambda in [lo, hi] distinct nonzero rational poles in [-3, 3], nonzero residues.
inline ExactModel random_exact_model(std::mt19937_64& rng, std::size_t lo = 2, std::size_t hi = 6) {
  std::uniform_int_distribution<std::size_t> lam(lo, hi);
  const std::size_t lambda = lam(rng);
  std::vector<Pole<GR>> poles;
  while (poles.size() < lambda) {
    GR z = random_rational(rng, -3, 3, 4);
    if (z.is_zero()) continue;
    bool fresh = true;
    for (const auto& p : poles) fresh = fresh && !(p.location == z);
    if (!fresh) continue;
    GR res;
    do res = random_rational(rng, -5, 5, 6);
    while (res.is_zero());
    poles.push_back({z, res});
  }
  return ExactModel::from_partial_fractions(std::move(poles));
}

}  // namespace padelimit::testing

#endif  // PADELIMIT_TESTS_TEST_SUPPORT_HPP_
