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
#include "wtgc/error.hpp"
#include "wtgc/homomorphism.hpp"
#include "wtgc/io.hpp"

namespace wtgc {
namespace {

std::string error_of(const std::string& text) {
  try {
    parse_grammar(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

TEST(ParseGrammar, Fx1) {
  const auto g = testing::load_fixture("fx1.wtg");
  EXPECT_EQ(g.semiring(), Semiring::arctic());
  EXPECT_EQ(g.alphabet(), (RankedAlphabet{{"alpha", 0}, {"gamma", 1}, {"sigma", 2}}));
  EXPECT_EQ(g.productions().size(), 3u);
  EXPECT_EQ(g.final_weight("qf"), Semiring::arctic().one());
  EXPECT_EQ(g.final_weight("q"), Semiring::arctic().zero());
  const auto* p = g.find("sigma(gamma(q),q) -> qf [eq 1.1=2]");
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(p->weight, Semiring::arctic().element(1));
}

TEST(ParseGrammar, ArityMismatchHasPosition) {
  const std::string text = "semiring nat\nalphabet alpha:0 sigma:2\nnonterminals q\nprod sigma(q) -> q @ 1\n";
  const auto message = error_of(text);
  EXPECT_NE(message.find("arity mismatch"), std::string::npos) << message;
  EXPECT_NE(message.find("at line 4"), std::string::npos) << message;
  try {
    parse_grammar(text);
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 6u);
  }
}

TEST(ParseGrammar, Errors) {
  EXPECT_NE(error_of("alphabet a:0\n").find("'semiring' must come first"), std::string::npos);
  EXPECT_NE(error_of("semiring nat\nalphabet a:0\nnonterminals q\nprod a -> q @ 0\n").find("zero-weight"),
            std::string::npos);
  EXPECT_NE(error_of("semiring nat\nalphabet a:0\nnonterminals q\nprod a -> r @ 1\n").find("undeclared"),
            std::string::npos);
  EXPECT_NE(error_of("semiring nat\nalphabet a:0\nnonterminals q\nprod b -> q @ 1\n").find("unknown symbol"),
            std::string::npos);
  EXPECT_NE(error_of("semiring nat\nalphabet a:0\nnonterminals q\nprod a -> q @ 1\nprod a -> q @ 2\n").find("duplicate"),
            std::string::npos);
  EXPECT_NE(error_of("semiring nat\nalphabet a:0\nnonterminals q\nprod a -> q [eq 1] @ 1\n").find("constraint"),
            std::string::npos);
  EXPECT_NE(error_of("semiring nat\nfrobnicate\n").find("unknown directive"), std::string::npos);
  EXPECT_NE(error_of("").find("missing 'semiring'"), std::string::npos);
}

TEST(ParseGrammar, CommentsAndMultipleConstraints) {
  const auto g = parse_grammar(
      "# leading comment\n"
      "semiring nat   # trailing comment\n"
      "alphabet a:0 f:3\n"
      "nonterminals q\n"
      "final q = 1\n"
      "prod a -> q @ 1\n"
      "prod f(q, q, q) -> q [eq 1=2, 1=3] [ne 2=3] @ 2\n");
  const auto* p = g.find("f(q,q,q) -> q [eq 1=2, 1=3] [ne 2=3]");
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(p->eq.size(), 2u);
  EXPECT_EQ(p->ne.size(), 1u);
}

TEST(RoundTrip, Fixtures) {
  for (const auto& name : testing::grammar_fixture_names()) {
    const auto g = testing::load_fixture(name);
    const auto text = serialize_grammar(g);
    const auto back = parse_grammar(text);
    EXPECT_EQ(back, g) << name;
    EXPECT_EQ(serialize_grammar(back), text) << name;
  }
}

TEST(RoundTrip, CanonicalForm) {
  const auto text = serialize_grammar(testing::load_fixture("fx1.wtg"));
  EXPECT_EQ(text,
            "semiring arctic\n"
            "alphabet alpha:0 gamma:1 sigma:2\n"
            "nonterminals q qf\n"
            "final qf = 0\n"
            "prod alpha -> q @ 0\n"
            "prod gamma(q) -> q @ 1\n"
            "prod sigma(gamma(q),q) -> qf [eq 1.1=2] @ 1\n");
}

TEST(RoundTrip, RandomGrammars) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = testing::random_eq_restricted(seed);
    EXPECT_EQ(parse_grammar(serialize_grammar(g)), g) << seed;
  }
}

TEST(ParseTree, Syntax) {
  const RankedAlphabet sigma{{"alpha", 0}, {"gamma", 1}, {"sigma", 2}};
  EXPECT_EQ(parse_tree(" sigma ( gamma(alpha) ,alpha ) ", &sigma).to_string(), "sigma(gamma(alpha),alpha)");
  EXPECT_THROW(parse_tree("sigma(alpha)", &sigma), ParseError);
  EXPECT_THROW(parse_tree("sigma(alpha,alpha", &sigma), ParseError);
  EXPECT_THROW(parse_tree("alpha alpha", &sigma), ParseError);
  EXPECT_THROW(parse_tree("beta", &sigma), ParseError);
}

TEST(ParseHom, Fx3) {
  const auto h = testing::load_fixture_hom("fx3.hom");
  EXPECT_EQ(h.source(), (RankedAlphabet{{"alpha", 0}, {"epsilon", 1}, {"gamma", 1}, {"phi", 1}}));
  EXPECT_EQ(h.target(), (RankedAlphabet{{"alpha", 0}, {"gamma", 1}, {"sigma", 2}}));
  EXPECT_EQ(h.rhs("phi").to_string(), "sigma(gamma(x1),x1)");
  EXPECT_TRUE(h.nondeleting());
  EXPECT_TRUE(h.nonerasing());
  EXPECT_EQ(serialize_hom(parse_hom(serialize_hom(h))), serialize_hom(h));
}

TEST(ParseHom, InferredAlphabets) {
  const auto h = parse_hom("hom\nf -> g(x2, x1)\na -> b\n");
  EXPECT_EQ(h.source(), (RankedAlphabet{{"a", 0}, {"f", 2}}));
  EXPECT_EQ(h.target(), (RankedAlphabet{{"b", 0}, {"g", 2}}));
}

TEST(ParseHom, Errors) {
  EXPECT_THROW(parse_hom("f -> g(x1)\n"), ParseError);
  EXPECT_THROW(parse_hom("hom\nsource f:1\ntarget g:1\nf -> g(x2)\n"), ParseError);
  EXPECT_THROW(parse_hom("hom\nsource f:1 a:0\ntarget g:1\nf -> g(x1)\n"), ParseError);
  EXPECT_THROW(parse_hom("hom\ntarget g:1\nf -> g(x1, x1)\n"), ParseError);
}

}  // namespace
}  // namespace wtgc
