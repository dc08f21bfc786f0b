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

#include "test_support.hpp"

#include <map>
#include <random>

#include "wtgc/decision.hpp"
#include "wtgc/io.hpp"
#include "wtgc/pumping.hpp"
#include "wtgc/transforms.hpp"

namespace wtgc::testing {

std::string fixture_path(const std::string& name) { return std::string(WTGC_FIXTURE_DIR) + "/" + name; }

Wtgc load_fixture(const std::string& name) { return parse_grammar(read_file(fixture_path(name))); }

TreeHom load_fixture_hom(const std::string& name) { return parse_hom(read_file(fixture_path(name))); }

std::vector<std::string> grammar_fixture_names() {
  return {"fx1.wtg", "fx2_g.wtg", "fx2_gp.wtg", "fx3.wtg", "fx4.wtg", "fx5.wtg", "fx6.wtg"};
}

Tree gamma_chain(std::size_t n) {
  Tree t = Tree::symbol("alpha");
  for (std::size_t i = 0; i < n; ++i) t = Tree::symbol("gamma", {t});
  return t;
}

Tree staircase(std::size_t i) { return Tree::symbol("sigma", {gamma_chain(i + 1), gamma_chain(i)}); }

Weight derivation_sum(const Wtgc& g, const Tree& t) {
  Weight total = g.semiring().zero();
  for (const auto& [q, f] : g.finals()) {
    for (const auto& d : derivations(g, t, q)) total += f * derivation_weight(g, d);
  }
  return total;
}

Wtgc with_sink(const Wtgc& g) {
  Wtgc out = g;
  const std::string sink = g.fresh_nonterminal("bot");
  out.add_nonterminal(sink);
  for (const auto& [sym, rank] : g.alphabet()) {
    out.add_production(Production{Tree::symbol(sym, std::vector<Tree>(rank, Tree::nonterminal(sink))), sink, {}, {},
                                  g.semiring().one()});
  }
  return out;
}

Wtgc random_eq_restricted(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  const Semiring nat = Semiring::natural();
  Wtgc g(nat, {{"a", 0}, {"b", 0}, {"g", 1}, {"f", 2}});
  const std::size_t n = 1 + pick(3);
  std::vector<std::string> qs;
  for (std::size_t i = 1; i <= n; ++i) {
    qs.push_back("q" + std::to_string(i));
    g.add_nonterminal(qs.back());
  }
  g.add_nonterminal("bot");
  for (const auto& q : qs) {
    if (pick(2) == 0) g.set_final(q, nat.element(1 + pick(2)));
  }
  if (g.finals().empty()) g.set_final(qs.front(), nat.one());
  auto state = [&] { return Tree::nonterminal(qs[pick(qs.size())]); };
  const Tree bot = Tree::nonterminal("bot");
  const std::size_t count = 2 + pick(4);
  for (std::size_t i = 0; i < count; ++i) {
    Production p{Tree::symbol("a"), qs[pick(qs.size())], {}, {}, nat.element(1 + pick(3))};
    switch (pick(7)) {
      case 0: p.lhs = Tree::symbol(pick(2) == 0 ? "a" : "b"); break;
      case 1: p.lhs = Tree::symbol("g", {state()}); break;
      case 2: p.lhs = Tree::symbol("g", {Tree::symbol("g", {state()})}); break;
      case 3: p.lhs = Tree::symbol("f", {state(), state()}); break;
      case 4:
        p.lhs = Tree::symbol("f", {state(), bot});
        p.eq = {{Position{1}, Position{2}}};
        break;
      case 5:
        p.lhs = Tree::symbol("f", {Tree::symbol("g", {state()}), bot});
        p.eq = {{Position{1, 1}, Position{2}}};
        break;
      default:
        p.lhs = Tree::symbol("f", {bot, Tree::symbol("f", {state(), Tree::symbol("b")})});
        p.eq = {{Position{2, 1}, Position{1}}};
        break;
    }
    if (g.find(p.id()) == nullptr) g.add_production(std::move(p));
  }
  for (const auto& [sym, rank] : g.alphabet()) {
    g.add_production(Production{Tree::symbol(sym, std::vector<Tree>(rank, bot)), "bot", {}, {}, nat.one()});
  }
  return g;
}

std::optional<Tree> finiteness_counterexample(const Wtgc& input, std::size_t max_size) {
  const Wtgc g = classify(input).unconstrained && !eq_restriction(input) ? with_sink(input) : input;
  const auto r = eq_restriction(g);
  if (!r) return std::nullopt;
  for (const auto& t : enumerate_support(g, max_size)) {
    for (const auto& [q, f] : g.finals()) {
      for (const auto& d : derivations(g, t, q)) {
        if (derivation_weight(g, d).is_zero()) continue;
        std::map<Position, std::string> reach;
        for (const auto& s : d.steps) {
          const auto& target = g.find(s.production)->target;
          if (target != r->sink) reach.emplace(s.position, target);
        }
        for (const auto& [outer, qo] : reach) {
          for (const auto& [inner, qi] : reach) {
            if (outer == inner || qo != qi || !outer.is_prefix_of(inner)) continue;
            const auto donor = incorporated(d, outer);
            const auto bigger = substitute_derivation(g, SubstitutionSite{d, donor, inner});
            if (bigger.tree.size() > t.size() && !evaluate(g, bigger.tree).is_zero()) return t;
          }
        }
      }
    }
  }
  return std::nullopt;
}

Wtgc expected_fx2_disambiguation() {
  const std::vector<std::set<std::string>> sets{{"q", "z"}, {"q"}, {"z"}, {}};
  auto name = [](const std::set<std::string>& s) {
    std::string out = "{";
    for (const auto& q : s) out += (out.size() > 1 ? "|" : "") + q;
    return out + "}";
  };
  auto meet = [](const std::set<std::string>& a, const std::set<std::string>& b) {
    std::set<std::string> out;
    for (const auto& q : a) {
      if (b.count(q) != 0) out.insert(q);
    }
    return out;
  };
  const auto b = Semiring::boolean();
  Wtgc out(b, {{"alpha", 0}, {"gamma", 1}, {"sigma", 2}});
  for (const auto& s : sets) {
    out.add_nonterminal(name(s));
    if (!s.empty()) out.set_final(name(s), b.one());
  }
  const ConstraintSet gamma_pair{{Position{1, 1}, Position{1, 2}}};
  const ConstraintSet sigma_pair{{Position{1}, Position{2}}};
  auto nt = [&](const std::set<std::string>& s) { return Tree::nonterminal(name(s)); };
  out.add_production({Tree::symbol("alpha"), name({"q", "z"}), {}, {}, b.one()});
  for (const auto& s : sets) {
    out.add_production({Tree::symbol("gamma", {nt(s)}), name(meet(s, {"q"})), gamma_pair, {}, b.one()});
    out.add_production({Tree::symbol("gamma", {nt(s)}), name(s), {}, gamma_pair, b.one()});
    for (const auto& r : sets) {
      const auto both = meet(s, r);
      out.add_production({Tree::symbol("sigma", {nt(s), nt(r)}), name(both), sigma_pair, {}, b.one()});
      out.add_production({Tree::symbol("sigma", {nt(s), nt(r)}), name(meet(both, {"z"})), {}, sigma_pair, b.one()});
    }
  }
  return out;
}

bool all_sigma_children_equal(const Tree& t) {
  for (const auto& w : positions(t)) {
    const Tree& s = subtree(t, w);
    if (s.label().name == "sigma" && !(s.child(0) == s.child(1))) return false;
  }
  return true;
}

bool no_gamma_over_equal_sigma(const Tree& t) {
  for (const auto& w : positions(t)) {
    const Tree& s = subtree(t, w);
    if (s.label().name != "gamma") continue;
    const Tree& c = s.child(0);
    if (c.label().name == "sigma" && c.child(0) == c.child(1)) return false;
  }
  return true;
}

Weight fx2_g_closed_form(const Tree& t) {
  const auto arctic = Semiring::arctic();
  if (!all_sigma_children_equal(t)) return arctic.zero();
  return arctic.element(2 * static_cast<long>(count_symbol(t, "gamma")));
}

Weight fx2_gp_closed_form(const Tree& t) {
  const auto arctic = Semiring::arctic();
  if (!no_gamma_over_equal_sigma(t)) return arctic.zero();
  return arctic.element(static_cast<long>(count_symbol(t, "gamma") + count_symbol(t, "sigma")));
}

}  // namespace wtgc::testing
