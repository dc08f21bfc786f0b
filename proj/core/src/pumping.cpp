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

#include "wtgc/pumping.hpp"

#include <algorithm>
#include <map>

#include "wtgc/error.hpp"

namespace wtgc {

namespace {

EqRestriction require_eq_restricted(const Wtgc& g) {
  auto r = eq_restriction(g);
  if (!r) throw PreconditionError("grammar is not eq-restricted classic with a sink");
  if (!classify(g).positive) throw PreconditionError("grammar is not positive");
  return std::move(*r);
}

Tree fill_context(const Tree& context, const std::vector<Tree>& parts) {
  std::map<std::size_t, Tree> theta;
  for (std::size_t i = 0; i < parts.size(); ++i) theta.emplace(i + 1, parts[i]);
  return substitute(context, theta);
}

struct Substituter {
  const Wtgc& g;
  const EqRestriction& r;

  DerivedTree run(const Derivation& d, const Position& w, const DerivedTree& donor) const {
    if (w.is_root()) return donor;
    const auto& last = d.steps.back();
    const Production* p = g.find(last.production);
    const auto dec = decompose(*p);
    const auto& gov = r.governing.at(p->id());
    const std::size_t k = dec.states.size();
    std::size_t j = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (dec.state_positions[i].is_prefix_of(w)) j = i;
    }
    if (j == k) throw PreconditionError("position " + w.to_string() + " lies inside a production context");
    std::vector<std::optional<DerivedTree>> parts(k);
    parts[j] = run(incorporated(d, dec.state_positions[j]), w.drop_prefix(dec.state_positions[j].length()), donor);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == j) continue;
      if (dec.states[i] == r.sink && gov[i] == j + 1) {
        parts[i] = DerivedTree{parts[j]->tree, sink_derivation(g, r.sink, parts[j]->tree)};
      } else {
        auto sub = incorporated(d, dec.state_positions[i]);
        parts[i] = DerivedTree{sub.input, std::move(sub)};
      }
    }
    std::vector<Tree> trees;
    std::vector<DerivationStep> steps;
    for (std::size_t i = 0; i < k; ++i) {
      trees.push_back(parts[i]->tree);
      for (const auto& s : parts[i]->derivation.steps) {
        steps.push_back({s.production, dec.state_positions[i].concat(s.position)});
      }
    }
    steps.push_back(last);
    Tree t = fill_context(dec.context, trees);
    return DerivedTree{t, Derivation{t, d.target, std::move(steps)}};
  }
};

std::string target_at(const Wtgc& g, const Derivation& d, const Position& w) {
  for (const auto& s : d.steps) {
    if (s.position == w) return g.find(s.production)->target;
  }
  return {};
}

}  // namespace

Derivation sink_derivation(const Wtgc& g, const std::string& sink, const Tree& u) {
  Derivation out{u, sink, {}};
  std::vector<Tree> children;
  for (std::size_t i = 0; i < u.arity(); ++i) {
    children.push_back(Tree::nonterminal(sink));
    for (const auto& s : sink_derivation(g, sink, u.child(i)).steps) {
      out.steps.push_back({s.production, Position{i + 1}.concat(s.position)});
    }
  }
  const Production p{Tree::symbol(u.label().name, std::move(children)), sink, {}, {}, g.semiring().one()};
  if (g.find(p.id()) == nullptr) throw PreconditionError("no sink production for " + u.label().name);
  out.steps.push_back({p.id(), Position{}});
  return out;
}

DerivedTree substitute_derivation(const Wtgc& g, const SubstitutionSite& site) {
  const auto r = require_eq_restricted(g);
  if (auto m = replay(g, site.base); !m.empty()) throw PreconditionError("base derivation: " + m);
  if (auto m = replay(g, site.donor); !m.empty()) throw PreconditionError("donor derivation: " + m);
  if (site.base.target == r.sink || site.donor.target == r.sink) throw PreconditionError("derivation to the sink");
  if (!has_position(site.base.input, site.at)) throw InvalidPosition("position " + site.at.to_string() + " not in the base tree");
  const std::string at_target = target_at(g, site.base, site.at);
  if (at_target != site.donor.target) {
    throw PreconditionError("the base derivation does not reach " + site.donor.target + " at " + site.at.to_string());
  }
  return Substituter{g, r}.run(site.base, site.at, DerivedTree{site.donor.input, site.donor});
}

Wtgc ensure_nonbot_child(const Wtgc& g) {
  const auto r = require_eq_restricted(g);
  Wtgc out(g.semiring(), g.alphabet());
  for (const auto& q : g.nonterminals()) out.add_nonterminal(q);
  for (const auto& [q, w] : g.finals()) out.set_final(q, w);
  const std::string top = g.fresh_nonterminal("top");
  bool used = false;
  for (const auto& p : g.productions()) {
    const auto dec = decompose(p);
    const bool offending = p.target != r.sink && !dec.states.empty() &&
                           std::all_of(dec.states.begin(), dec.states.end(), [&](const auto& s) { return s == r.sink; });
    if (!offending) {
      out.add_production(p);
      continue;
    }
    used = true;
    Production copy = p;
    copy.lhs = replace(p.lhs, Tree::nonterminal(top), dec.state_positions.front());
    out.add_production(std::move(copy));
  }
  if (used) {
    out.add_nonterminal(top);
    for (const auto& [sym, rank] : g.alphabet()) {
      std::vector<Tree> children(rank, Tree::nonterminal(r.sink));
      if (rank > 0) children.front() = Tree::nonterminal(top);
      out.add_production(Production{Tree::symbol(sym, std::move(children)), top, {}, {}, g.semiring().one()});
    }
  }
  return out;
}

std::size_t grammar_height(const Wtgc& g) { return (g.nonterminals().size() + 1) * production_height(g); }

std::vector<DerivedTree> pump(const Wtgc& g, const Derivation& d, std::size_t count) {
  const auto r = require_eq_restricted(g);
  if (auto m = replay(g, d); !m.empty()) throw PreconditionError("derivation: " + m);
  if (d.target == r.sink) throw PreconditionError("derivation to the sink");
  if (derivation_weight(g, d).is_zero()) throw PreconditionError("derivation has weight zero");
  const std::size_t bound = grammar_height(g);
  if (d.input.height() <= bound) {
    throw PreconditionError("tree height " + std::to_string(d.input.height()) + " does not exceed " + std::to_string(bound));
  }
  const Substituter sub{g, r};
  std::vector<DerivedTree> out;
  DerivedTree current{d.input, d};
  constexpr std::size_t kMaxRounds = 64;
  while (out.size() < count) {
    const std::size_t start_height = current.tree.height();
    std::size_t round = 0;
    while (current.tree.height() <= start_height) {
      if (++round > kMaxRounds) throw Error("pumping did not increase the height");
      std::map<Position, std::string> reach;
      for (const auto& s : current.derivation.steps) {
        const auto& q = g.find(s.production)->target;
        if (q != r.sink) reach.emplace(s.position, q);
      }
      Position deepest;
      for (const auto& [w, _] : reach) {
        if (w.length() > deepest.length()) deepest = w;
      }
      std::vector<Position> chain;
      for (std::size_t n = 0; n <= deepest.length(); ++n) {
        if (reach.count(deepest.prefix(n)) > 0) chain.push_back(deepest.prefix(n));
      }
      std::optional<std::pair<Position, Position>> pair;
      for (std::size_t b = 1; b < chain.size() && !pair; ++b) {
        for (std::size_t a = 0; a < b && !pair; ++a) {
          if (reach.at(chain[a]) == reach.at(chain[b])) pair.emplace(chain[a], chain[b]);
        }
      }
      if (!pair) throw Error("no repeated nonterminal on the deepest path");
      const auto donor = incorporated(current.derivation, pair->first);
      current = sub.run(current.derivation, pair->second, DerivedTree{donor.input, donor});
    }
    if (derivation_weight(g, current.derivation).is_zero()) throw Error("pumped derivation has weight zero");
    out.push_back(current);
  }
  return out;
}

std::optional<Tree> grow_witness(const Wtgc& g, const std::string& q, std::size_t min_height, std::size_t rounds) {
  const auto r = require_eq_restricted(g);
  std::optional<Tree> filler;
  for (const auto& [sym, rank] : g.alphabet()) {
    if (rank == 0) {
      filler = Tree::symbol(sym);
      break;
    }
  }
  if (!filler) return std::nullopt;
  constexpr std::size_t kPool = 3;
  Evaluator ev(g);
  std::map<std::string, std::vector<Tree>> pool;
  auto by_height = [](const Tree& a, const Tree& b) {
    if (a.height() != b.height()) return a.height() > b.height();
    return CanonicalTreeLess{}(a, b);
  };
  for (std::size_t round = 0; round < rounds; ++round) {
    std::map<std::string, std::vector<Tree>> next = pool;
    for (const auto& p : g.sorted_productions()) {
      if (p.target == r.sink) continue;
      const auto dec = decompose(p);
      const auto& gov = r.governing.at(p.id());
      const std::size_t k = dec.states.size();
      std::vector<std::size_t> governors;
      bool possible = true;
      for (std::size_t i = 0; i < k; ++i) {
        if (gov[i] != i + 1 || dec.states[i] == r.sink) continue;
        if (pool[dec.states[i]].empty()) possible = false;
        governors.push_back(i);
      }
      if (!possible) continue;
      std::vector<std::size_t> choice(governors.size(), 0);
      while (true) {
        std::vector<Tree> parts(k, *filler);
        for (std::size_t n = 0; n < governors.size(); ++n) parts[governors[n]] = pool[dec.states[governors[n]]][choice[n]];
        for (std::size_t i = 0; i < k; ++i) {
          if (gov[i] != i + 1) parts[i] = parts[gov[i] - 1];
        }
        Tree t = fill_context(dec.context, parts);
        auto& bucket = next[p.target];
        if (!ev.state_weight(p.target, t).is_zero() && std::find(bucket.begin(), bucket.end(), t) == bucket.end()) {
          bucket.push_back(t);
        }
        std::size_t n = 0;
        while (n < choice.size() && ++choice[n] == pool[dec.states[governors[n]]].size()) choice[n++] = 0;
        if (n == choice.size()) break;
      }
    }
    for (auto& [_, bucket] : next) {
      std::sort(bucket.begin(), bucket.end(), by_height);
      if (bucket.size() > kPool) bucket.erase(bucket.begin() + kPool, bucket.end());
    }
    if (next == pool) return std::nullopt;
    pool = std::move(next);
    for (const auto& t : pool[q]) {
      if (t.height() > min_height) return t;
    }
  }
  return std::nullopt;
}

std::pair<Tree, Tree> separation_family(std::size_t n) {
  if (n == 0) throw PreconditionError("separation family starts at n = 1");
  const Tree a = Tree::symbol("a");
  Tree t = Tree::symbol("g", {a, a});
  Tree u = t;
  for (std::size_t i = 1; i < n; ++i) {
    u = Tree::symbol("f_", {u, t});
    t = Tree::symbol("f", {t, t});
  }
  return {t, u};
}

}  // namespace wtgc
