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

#include "wtgc/decision.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "wtgc/error.hpp"
#include "wtgc/pumping.hpp"
#include "wtgc/semantics.hpp"
#include "wtgc/transforms.hpp"

namespace wtgc {

namespace {

std::string join(const std::set<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ' ';
    out += n;
  }
  return out;
}

bool all_productive(const DecomposedLhs& d, const std::set<std::string>& productive) {
  return std::all_of(d.states.begin(), d.states.end(), [&](const auto& s) { return productive.count(s) > 0; });
}

struct Prepared {
  Wtgc grammar;
  EqRestriction restriction;
  ProductivityTable table;
};

Prepared prepare(const Wtgc& g) {
  Wtgc h = decision_grammar(g);
  auto r = eq_restriction(h);
  if (!r) throw Error("preprocessing lost the eq-restriction");
  auto table = productivity(h, r->sink);
  return Prepared{std::move(h), std::move(*r), std::move(table)};
}

std::string table_text(const ProductivityTable& t) {
  return "productive: " + join(t.productive) + "\nreachable: " + join(t.reachable) + "\n";
}

}  // namespace

ProductivityTable productivity(const Wtgc& g, const std::string& sink) {
  ProductivityTable t;
  t.productive.insert(sink);
  std::vector<std::pair<const Production*, DecomposedLhs>> rules;
  for (const auto& p : g.productions()) {
    if (!p.weight.is_zero()) rules.emplace_back(&p, decompose(p));
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [p, d] : rules) {
      if (t.productive.count(p->target) == 0 && all_productive(d, t.productive)) {
        t.productive.insert(p->target);
        changed = true;
      }
    }
  }
  std::vector<std::string> work;
  for (const auto& [q, _] : g.finals()) {
    if (t.productive.count(q) > 0 && t.reachable.insert(q).second) work.push_back(q);
  }
  while (!work.empty()) {
    const std::string q = work.back();
    work.pop_back();
    for (const auto& [p, d] : rules) {
      if (p->target != q || !all_productive(d, t.productive)) continue;
      for (const auto& s : d.states) {
        if (t.reachable.insert(s).second) work.push_back(s);
      }
    }
  }
  return t;
}

namespace {

// An unconstrained grammar is eq-restricted once it has a sink.
Wtgc with_sink(const Wtgc& g) {
  Wtgc out = g;
  const std::string sink = g.fresh_nonterminal("bot");
  out.add_nonterminal(sink);
  for (const auto& [sym, rank] : g.alphabet()) {
    std::vector<Tree> children(rank, Tree::nonterminal(sink));
    out.add_production(Production{Tree::symbol(sym, std::move(children)), sink, {}, {}, g.semiring().one()});
  }
  return out;
}

}  // namespace

Wtgc decision_grammar(const Wtgc& g) {
  if (!g.semiring().zero_sum_free()) throw PreconditionError("support decisions require a zero-sum-free semiring");
  const auto flags = classify(g);
  if (!eq_restriction(g) && flags.unconstrained) return decision_grammar(with_sink(g));
  if (!eq_restriction(g) || !flags.positive) {
    throw PreconditionError("support decisions are limited to eq-restricted positive classic grammars");
  }
  return ensure_nonbot_child(eliminate_zero_derivations(boolean_finals(g)));
}

Verdict decide_empty(const Wtgc& g) {
  const auto prep = prepare(g);
  bool empty = true;
  for (const auto& [q, _] : prep.grammar.finals()) {
    if (prep.table.productive.count(q) > 0) empty = false;
  }
  return Verdict{empty, table_text(prep.table)};
}

Verdict decide_finite(const Wtgc& g) {
  const auto prep = prepare(g);
  const auto& h = prep.grammar;
  const auto& sink = prep.restriction.sink;
  const auto& table = prep.table;
  const bool has_unary = std::any_of(h.alphabet().begin(), h.alphabet().end(), [](const auto& e) { return e.second > 0; });
  std::map<std::string, std::set<std::string>> edges;
  for (const auto& p : h.sorted_productions()) {
    if (p.target == sink || table.reachable.count(p.target) == 0) continue;
    const auto d = decompose(p);
    if (!all_productive(d, table.productive)) continue;
    const auto& gov = prep.restriction.governing.at(p.id());
    for (std::size_t i = 0; i < d.states.size(); ++i) {
      if (d.states[i] != sink) {
        edges[p.target].insert(d.states[i]);
      } else if (gov[i] == i + 1 && has_unary) {
        return Verdict{false, "unconstrained sink child in " + p.id() + "\n"};
      }
    }
  }
  std::map<std::string, int> color;
  std::vector<std::string> stack;
  std::vector<std::string> cycle;
  std::function<bool(const std::string&)> visit = [&](const std::string& q) {
    color[q] = 1;
    stack.push_back(q);
    for (const auto& r : edges[q]) {
      if (color[r] == 1) {
        auto it = std::find(stack.begin(), stack.end(), r);
        cycle.assign(it, stack.end());
        cycle.push_back(r);
        return true;
      }
      if (color[r] == 0 && visit(r)) return true;
    }
    stack.pop_back();
    color[q] = 2;
    return false;
  };
  for (const auto& q : table.reachable) {
    if (q == sink || color[q] != 0) continue;
    if (visit(q)) {
      std::string text = "cycle:";
      for (const auto& c : cycle) text += ' ' + c;
      return Verdict{false, text + "\n"};
    }
  }
  return Verdict{true, "no reachable cycle\n" + table_text(table)};
}

bool is_support_empty(const Wtgc& g) { return decide_empty(g).value; }

bool is_support_finite(const Wtgc& g) { return decide_finite(g).value; }

std::vector<Tree> enumerate_support(const Wtgc& g, std::size_t max_size) {
  Evaluator ev(g);
  std::vector<Tree> out;
  for (const auto& t : enumerate_trees(g.alphabet(), max_size)) {
    if (!ev.evaluate(t).is_zero()) out.push_back(t);
  }
  return out;
}

}  // namespace wtgc
