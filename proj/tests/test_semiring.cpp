// Copyright 2026 The wtgc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "wtgc/error.hpp"
#include "wtgc/semiring.hpp"

namespace wtgc {
namespace {

std::vector<Semiring> shipped() {
  return {Semiring::boolean(), Semiring::natural(), Semiring::tropical(), Semiring::arctic(), Semiring::zmod(4),
          Semiring::zmod(5)};
}

std::vector<Weight> carrier_sample(const Semiring& s) {
  if (s.finite()) return s.elements();
  std::mt19937_64 rng(7);
  return s.sample(rng, 8);
}

TEST(Semiring, ArcticSumIsMax) {
  const auto a = Semiring::arctic();
  EXPECT_EQ(a.element(2) + a.element(3), a.element(3));
  EXPECT_EQ((a.element(2) * a.element(3)).to_string(), "5");
  EXPECT_EQ(a.zero().to_string(), "-inf");
}

TEST(Semiring, TropicalProductIsAddition) {
  const auto t = Semiring::tropical();
  EXPECT_EQ(t.element(2) * t.element(3), t.element(5));
  EXPECT_EQ(t.element(2) + t.element(3), t.element(2));
  EXPECT_EQ(t.zero().to_string(), "inf");
}

TEST(Semiring, ZmodArithmetic) {
  const auto z = Semiring::zmod(4);
  EXPECT_EQ(z.element(3) + z.element(3), z.element(2));
  EXPECT_EQ(z.element(2) * z.element(2), z.zero());
  EXPECT_THROW(Semiring::zmod(1), SemiringError);
}

TEST(Semiring, Identities) {
  for (const auto& s : shipped()) {
    for (const auto& x : carrier_sample(s)) {
      EXPECT_EQ(s.zero() + x, x) << s.name();
      EXPECT_EQ(s.one() * x, x) << s.name();
      EXPECT_EQ(s.zero() * x, s.zero()) << s.name();
    }
  }
}

TEST(Semiring, Laws) {
  for (const auto& s : shipped()) {
    const auto xs = carrier_sample(s);
    for (const auto& a : xs) {
      for (const auto& b : xs) {
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        for (const auto& c : xs) {
          EXPECT_EQ((a + b) + c, a + (b + c)) << s.name();
          EXPECT_EQ((a * b) * c, a * (b * c)) << s.name();
          EXPECT_EQ(a * (b + c), a * b + a * c) << s.name();
        }
      }
    }
  }
}

TEST(Semiring, Flags) {
  for (const auto& s : {Semiring::boolean(), Semiring::natural(), Semiring::tropical(), Semiring::arctic()}) {
    EXPECT_TRUE(s.zero_sum_free()) << s.name();
    EXPECT_TRUE(s.zero_divisor_free()) << s.name();
  }
  EXPECT_FALSE(Semiring::zmod(4).zero_sum_free());
  EXPECT_FALSE(Semiring::zmod(4).zero_divisor_free());
  EXPECT_TRUE(Semiring::zmod(5).zero_divisor_free());
}

TEST(Semiring, MixingCarriersThrows) {
  EXPECT_THROW(Semiring::natural().one() + Semiring::arctic().one(), SemiringError);
  EXPECT_THROW(Semiring::zmod(4).one() * Semiring::zmod(5).one(), SemiringError);
}

TEST(Semiring, Literals) {
  EXPECT_EQ(Semiring::parse("zmod 4"), Semiring::zmod(4));
  EXPECT_EQ(Semiring::parse("nat"), Semiring::natural());
  EXPECT_EQ(Semiring::tropical().parse_element("inf"), Semiring::tropical().zero());
  EXPECT_EQ(Semiring::arctic().parse_element("-inf"), Semiring::arctic().zero());
  EXPECT_THROW(Semiring::boolean().parse_element("2"), SemiringError);
  EXPECT_THROW(Semiring::parse("reals"), SemiringError);
  for (const auto& s : shipped()) {
    for (const auto& x : carrier_sample(s)) EXPECT_EQ(s.parse_element(x.to_string()), x);
  }
}

TEST(Semiring, BigNaturals) {
  const auto n = Semiring::natural();
  EXPECT_EQ(n.element(3).pow(40).to_string(), "12157665459056928801");
}

TEST(SemiringHom, SupportHom) {
  const auto a = Semiring::arctic();
  const auto h = support_hom(a);
  EXPECT_EQ(h(a.zero()), Semiring::boolean().zero());
  EXPECT_EQ(h(a.element(5)), Semiring::boolean().one());
  EXPECT_EQ(check_hom(h, carrier_sample(a)), "");
  try {
    support_hom(Semiring::zmod(4));
    FAIL();
  } catch (const SemiringError& e) {
    EXPECT_NE(std::string(e.what()).find("not zero-sum free"), std::string::npos);
  }
}

TEST(SemiringHom, ShippedHomsSatisfyLaws) {
  for (const auto& s : {Semiring::boolean(), Semiring::natural(), Semiring::tropical(), Semiring::arctic()}) {
    EXPECT_EQ(check_hom(support_hom(s), carrier_sample(s)), "") << s.name();
  }
  for (const auto& s : shipped()) EXPECT_EQ(check_hom(identity_hom(s), carrier_sample(s)), "") << s.name();
  EXPECT_EQ(check_hom(modular_hom(4), carrier_sample(Semiring::natural())), "");
}

TEST(SemiringHom, CheckHomReportsViolation) {
  const auto n = Semiring::natural();
  SemiringHom bad{n, Semiring::boolean(), [](const Weight&) { return Semiring::boolean().one(); }};
  EXPECT_NE(check_hom(bad, {n.zero(), n.one()}), "");
}

TEST(PowerProfile, Examples) {
  const auto z = Semiring::zmod(4);
  EXPECT_EQ(power_profile(z.element(2)), (PowerProfile{2, 1}));
  EXPECT_EQ(power_profile(z.element(3)), (PowerProfile{0, 2}));
  EXPECT_EQ(power_profile(Semiring::boolean().one()), (PowerProfile{0, 1}));
  EXPECT_EQ(power_profile(Semiring::natural().element(7)), (PowerProfile{0, 1}));
}

TEST(PowerProfile, PeriodHolds) {
  for (const auto& m : {4u, 6u, 8u, 9u, 12u}) {
    const auto z = Semiring::zmod(m);
    for (const auto& a : z.elements()) {
      const auto p = power_profile(a);
      EXPECT_EQ(a.pow(p.preperiod + p.period), a.pow(p.preperiod)) << m << ' ' << a;
      if (p.preperiod > 0) {
        EXPECT_NE(a.pow(p.preperiod - 1 + p.period), a.pow(p.preperiod - 1));
      }
    }
  }
}

}  // namespace
}  // namespace wtgc
