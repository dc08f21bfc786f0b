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

#include "test_support.hpp"
#include "wtgc/decision.hpp"
#include "wtgc/error.hpp"
#include "wtgc/homomorphism.hpp"
#include "wtgc/io.hpp"
#include "wtgc/pumping.hpp"

namespace wtgc {
namespace {

using testing::load_fixture;

const char* const kSmallHeader =
    "semiring nat\n"
    "alphabet a:0 g:1 f:2\n"
    "nonterminals q r bot\n"
    "prod a -> bot @ 1\n"
    "prod g(bot) -> bot @ 1\n"
    "prod f(bot, bot) -> bot @ 1\n";

TEST(Decide, Fx3ImageIsNonemptyAndInfinite) {
  const auto img = image_grammar(load_fixture("fx3.wtg"), testing::load_fixture_hom("fx3.hom"));
  const auto empty = decide_empty(img);
  EXPECT_FALSE(empty.value);
  EXPECT_NE(empty.explanation.find("productive: "), std::string::npos);
  const auto finite = decide_finite(img);
  EXPECT_FALSE(finite.value);
  EXPECT_EQ(finite.explanation, "cycle: q q\n");
  EXPECT_TRUE(testing::finiteness_counterexample(img, 8).has_value());
}

TEST(Decide, EmptySupport) {
  const auto g = parse_grammar(std::string(kSmallHeader) +
                               "final r = 1\n"
                               "prod a -> q @ 1\n"
                               "prod g(r) -> r @ 1\n");
  EXPECT_TRUE(is_support_empty(g));
  EXPECT_TRUE(is_support_finite(g));
  EXPECT_TRUE(enumerate_support(g, 7).empty());
}

TEST(Decide, FiniteNonemptySupport) {
  const auto g = parse_grammar(std::string(kSmallHeader) +
                               "final r = 1\n"
                               "prod a -> q @ 1\n"
                               "prod f(q, bot) -> r [eq 1=2] @ 2\n");
  EXPECT_FALSE(is_support_empty(g));
  const auto v = decide_finite(g);
  EXPECT_TRUE(v.value) << v.explanation;
  EXPECT_EQ(v.explanation.rfind("no reachable cycle\n", 0), 0u);
  auto looping = g;
  looping.add_production(Production{Tree::symbol("g", {Tree::nonterminal("r")}), "r", {}, {}, Semiring::natural().one()});
  EXPECT_FALSE(is_support_finite(looping));
}

TEST(Decide, FreeSinkChildMakesSupportInfinite) {
  const auto g = parse_grammar(std::string(kSmallHeader) +
                               "final r = 1\n"
                               "prod a -> q @ 1\n"
                               "prod f(q, bot) -> r @ 1\n");
  const auto v = decide_finite(g);
  EXPECT_FALSE(v.value);
  EXPECT_EQ(v.explanation, "unconstrained sink child in f(q,bot) -> r^f\n");
  EXPECT_GT(enumerate_support(g, 7).size(), enumerate_support(g, 5).size());
}

TEST(Decide, Fx4AndFx5) {
  EXPECT_FALSE(is_support_empty(load_fixture("fx4.wtg")));
  EXPECT_FALSE(is_support_finite(load_fixture("fx4.wtg")));
  const auto support = enumerate_support(load_fixture("fx5.wtg"), 7);
  const auto [t2, u2] = separation_family(2);
  EXPECT_NE(std::find(support.begin(), support.end(), t2), support.end());
  EXPECT_NE(std::find(support.begin(), support.end(), u2), support.end());
}

TEST(EnumerateSupport, Fx1) {
  const auto support = enumerate_support(load_fixture("fx1.wtg"), 7);
  EXPECT_EQ(support, (std::vector<Tree>{testing::staircase(0), testing::staircase(1)}));
}

TEST(Decide, RejectsUnsupportedGrammars) {
  EXPECT_THROW(decide_empty(load_fixture("fx1.wtg")), PreconditionError);
  EXPECT_THROW(decide_finite(load_fixture("fx2_gp.wtg")), PreconditionError);
  const auto neg = parse_grammar(std::string(kSmallHeader) +
                                 "final q = 1\n"
                                 "prod f(q, bot) -> q [ne 1=2] @ 1\n");
  EXPECT_THROW(decide_empty(neg), PreconditionError);
  auto zmod = parse_grammar(
      "semiring zmod 4\nalphabet a:0\nnonterminals q bot\nfinal q = 1\nprod a -> q @ 2\nprod a -> bot @ 1\n");
  EXPECT_THROW(decide_empty(zmod), PreconditionError);
}

TEST(Decide, ZeroWeightDerivationsAreIgnored) {
  // Over the arctic semiring nothing multiplies to zero, so build the zero
  // through a final weight instead.
  const auto g = parse_grammar(std::string(kSmallHeader) +
                               "final q = 0\n"
                               "final r = 1\n"
                               "prod a -> q @ 1\n");
  EXPECT_TRUE(is_support_empty(g));
}

TEST(Decide, AgreesWithBruteForceOnRandomGrammars) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto g = testing::random_eq_restricted(seed);
    const bool empty = is_support_empty(g);
    EXPECT_EQ(empty, enumerate_support(g, 7).empty()) << seed << '\n' << serialize_grammar(g);
    if (empty) continue;
    if (is_support_finite(g)) {
      EXPECT_FALSE(testing::finiteness_counterexample(g, 7).has_value()) << seed << '\n' << serialize_grammar(g);
      continue;
    }
    // A tall tree in the support confirms an infinite verdict.
    bool tall = false;
    for (const auto& [q, f] : g.finals()) {
      const auto t = grow_witness(g, q, 12);
      if (t && !evaluate(g, *t).is_zero()) tall = true;
    }
    EXPECT_TRUE(tall) << seed << '\n' << serialize_grammar(g);
  }
}

TEST(Productivity, Table) {
  const auto g = decision_grammar(load_fixture("fx4.wtg"));
  const auto t = productivity(g, "bot");
  EXPECT_EQ(t.productive, (std::set<std::string>{"bot", "q", "q^f"}));
  EXPECT_EQ(t.reachable, (std::set<std::string>{"bot", "q", "q^f"}));
}

}  // namespace
}  // namespace wtgc
