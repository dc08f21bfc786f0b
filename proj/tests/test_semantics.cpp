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

#include "test_support.hpp"
#include "wtgc/error.hpp"
#include "wtgc/io.hpp"
#include "wtgc/semantics.hpp"
#include "wtgc/transforms.hpp"

namespace wtgc {
namespace {

using testing::load_fixture;
using testing::staircase;

Tree T(const std::string& text) { return parse_tree(text); }

TEST(Derivations, Fx1Figure) {
  const auto g = load_fixture("fx1.wtg");
  const auto ds = derivations(g, T("sigma(gamma(gamma(alpha)),gamma(alpha))"), "qf");
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds.front().to_string(),
            "(alpha -> q @ 1.1.1) (gamma(q) -> q @ 1.1) (alpha -> q @ 2.1) (gamma(q) -> q @ 2) "
            "(sigma(gamma(q),q) -> qf [eq 1.1=2] @ e)");
  EXPECT_EQ(derivation_weight(g, ds.front()), Semiring::arctic().element(3));
  EXPECT_EQ(replay(g, ds.front()), "");
}

TEST(Derivations, EmptyAndUnique) {
  EXPECT_TRUE(derivations(load_fixture("fx1.wtg"), T("alpha"), "qf").empty());
  EXPECT_EQ(derivations(load_fixture("fx2_g.wtg"), T("sigma(gamma(alpha),gamma(alpha))"), "q").size(), 1u);
}

TEST(DerivationWeight, Examples) {
  const auto g = load_fixture("fx3.wtg");
  const auto ds = derivations(g, T("phi(gamma(epsilon(alpha)))"), "qf");
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(derivation_weight(g, ds.front()), Semiring::natural().element(2));
  EXPECT_EQ(derivation_weight(g, Derivation{T("alpha"), "q", {}}), Semiring::natural().one());
  Derivation foreign{T("alpha"), "q", {{"beta -> q", Position{}}}};
  EXPECT_THROW(derivation_weight(g, foreign), PreconditionError);
}

TEST(StateWeight, Examples) {
  const auto g = load_fixture("fx1.wtg");
  EXPECT_EQ(state_weight(g, "q", T("gamma(gamma(alpha))")), Semiring::arctic().element(2));
  EXPECT_EQ(state_weight(g, "qf", T("gamma(alpha)")), Semiring::arctic().zero());
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(load_fixture("fx1.wtg"), staircase(1)), Semiring::arctic().element(3));
  EXPECT_EQ(evaluate(load_fixture("fx1.wtg"), T("sigma(alpha,alpha)")).to_string(), "-inf");
  EXPECT_EQ(evaluate(load_fixture("fx2_gp.wtg"), T("sigma(gamma(alpha),gamma(alpha))")), Semiring::arctic().element(3));
  EXPECT_EQ(evaluate(load_fixture("fx2_g.wtg"), T("sigma(gamma(alpha),gamma(alpha))")), Semiring::arctic().element(4));
}

TEST(Semantics, DerivationSumEqualsStateWeight) {
  for (const auto& name : testing::grammar_fixture_names()) {
    const auto g = load_fixture(name);
    Evaluator ev(g);
    for (const auto& t : enumerate_trees(g.alphabet(), 7)) {
      for (const auto& q : g.nonterminals()) {
        Weight sum = g.semiring().zero();
        for (const auto& d : derivations(g, t, q)) sum += derivation_weight(g, d);
        ASSERT_EQ(sum, ev.state_weight(q, t)) << name << ' ' << t << ' ' << q;
      }
    }
  }
}

TEST(Semantics, DerivationsReplayInLeftmostOrder) {
  for (const auto& name : testing::grammar_fixture_names()) {
    const auto g = load_fixture(name);
    for (const auto& t : enumerate_trees(g.alphabet(), 6)) {
      for (const auto& q : g.nonterminals()) {
        const auto ds = derivations(g, t, q);
        EXPECT_EQ(count_derivations(g, t, q), ds.size());
        for (const auto& d : ds) {
          EXPECT_EQ(replay(g, d), "") << name << ' ' << d.to_string();
          for (std::size_t i = 1; i < d.steps.size(); ++i) {
            EXPECT_TRUE(leftmost_before(d.steps[i - 1].position, d.steps[i].position));
          }
        }
      }
    }
  }
}

TEST(Replay, DetectsBrokenDerivations) {
  const auto g = load_fixture("fx1.wtg");
  const Tree t = T("sigma(gamma(gamma(alpha)),gamma(alpha))");
  auto d = derivations(g, t, "qf").front();
  auto swapped = d;
  std::swap(swapped.steps[0], swapped.steps[1]);
  EXPECT_NE(replay(g, swapped), "");
  auto truncated = d;
  truncated.steps.pop_back();
  EXPECT_NE(replay(g, truncated), "");
  Derivation wrong_input{T("sigma(gamma(gamma(alpha)),gamma(gamma(alpha)))"), "qf", d.steps};
  EXPECT_NE(replay(g, wrong_input), "");
  const auto bad = derivations(g, T("sigma(gamma(alpha),gamma(alpha))"), "qf");
  EXPECT_TRUE(bad.empty());
}

TEST(Incorporated, Examples) {
  const auto g = load_fixture("fx1.wtg");
  const auto d = derivations(g, T("sigma(gamma(gamma(alpha)),gamma(alpha))"), "qf").front();
  EXPECT_EQ(incorporated(d, Position{}).steps, d.steps);
  const auto at1 = incorporated(d, Position{1});
  EXPECT_EQ(at1.to_string(), "(alpha -> q @ 1.1) (gamma(q) -> q @ 1)");
  EXPECT_TRUE(at1.target.empty());
  const auto at11 = incorporated(d, Position{1, 1});
  EXPECT_EQ(at11.to_string(), "(alpha -> q @ 1) (gamma(q) -> q @ e)");
  EXPECT_EQ(at11.target, "q");
  EXPECT_EQ(replay(g, at11), "");
  EXPECT_THROW(incorporated(d, Position{3}), InvalidPosition);
}

TEST(Unambiguous, Examples) {
  const auto g = load_fixture("fx1.wtg");
  EXPECT_FALSE(check_unambiguous_upto(g, 7).has_value());
  auto amb = g;
  amb.add_production(Production{Tree::symbol("sigma", {Tree::nonterminal("q"), Tree::nonterminal("q")}), "qf", {}, {},
                                Semiring::arctic().one()});
  amb.add_production(Production{Tree::symbol("sigma", {Tree::nonterminal("q"), Tree::nonterminal("q")}), "qf",
                                {{Position{1}, Position{2}}}, {}, Semiring::arctic().one()});
  const auto witness = check_unambiguous_upto(amb, 5);
  ASSERT_TRUE(witness.has_value());
  EXPECT_EQ(witness->to_string(), "sigma(alpha,alpha)");
  EXPECT_FALSE(check_unambiguous_upto(Wtgc(Semiring::natural(), {{"a", 0}}), 4).has_value());
}

TEST(Evaluate, InvariantUnderReorderingAndNormalize) {
  std::mt19937_64 rng(11);
  for (const auto& name : testing::grammar_fixture_names()) {
    const auto g = load_fixture(name);
    auto prods = g.productions();
    std::shuffle(prods.begin(), prods.end(), rng);
    Wtgc h(g.semiring(), g.alphabet());
    for (const auto& q : g.nonterminals()) h.add_nonterminal(q);
    for (const auto& [q, w] : g.finals()) h.set_final(q, w);
    for (auto& p : prods) h.add_production(p);
    const auto n = normalize(g);
    Evaluator eg(g);
    Evaluator eh(h);
    Evaluator en(n);
    for (const auto& t : enumerate_trees(g.alphabet(), 7)) {
      EXPECT_EQ(eg.evaluate(t), eh.evaluate(t)) << name;
      EXPECT_EQ(eg.evaluate(t), en.evaluate(t)) << name;
    }
  }
}

}  // namespace
}  // namespace wtgc
