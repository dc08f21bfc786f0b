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

#include "wtgc/grammar.hpp"

#include <algorithm>
#include <numeric>

#include "wtgc/error.hpp"

namespace wtgc {

std::string Production::id() const {
  std::string out = lhs.to_string() + " -> " + target;
  if (!eq.empty()) out += " [eq " + format_constraints(eq) + "]";
  if (!ne.empty()) out += " [ne " + format_constraints(ne) + "]";
  return out;
}

namespace {

void decompose_into(const Tree& t, Position& at, DecomposedLhs& out, std::vector<Tree>& rebuilt) {
  if (t.is_nonterminal()) {
    out.states.push_back(t.label().name);
    out.state_positions.push_back(at);
    rebuilt.push_back(Tree::variable(out.states.size()));
    return;
  }
  std::vector<Tree> children;
  children.reserve(t.arity());
  for (std::size_t i = 0; i < t.arity(); ++i) {
    at = at.child(i + 1);
    decompose_into(t.child(i), at, out, children);
    at = at.prefix(at.length() - 1);
  }
  if (t.is_variable()) {
    rebuilt.push_back(t);
  } else {
    rebuilt.push_back(Tree::symbol(t.label().name, std::move(children)));
  }
}

}  // namespace

DecomposedLhs decompose(const Production& p) {
  DecomposedLhs out{p.lhs, {}, {}};
  std::vector<Tree> rebuilt;
  Position at;
  decompose_into(p.lhs, at, out, rebuilt);
  out.context = rebuilt.front();
  return out;
}

// --- Wtgc -------------------------------------------------------------------

Wtgc::Wtgc(Semiring semiring, RankedAlphabet alphabet)
    : semiring_(semiring), alphabet_(std::move(alphabet)) {}

void Wtgc::add_symbol(const std::string& name, std::size_t rank) {
  auto [it, inserted] = alphabet_.emplace(name, rank);
  if (!inserted && it->second != rank) {
    throw PreconditionError("symbol " + name + " redeclared with a different rank");
  }
}

void Wtgc::add_nonterminal(const std::string& q) { nonterminals_.insert(q); }

std::string Wtgc::fresh_nonterminal(const std::string& base) const {
  std::string name = base;
  while (nonterminals_.count(name) > 0 || alphabet_.count(name) > 0) name += '\'';
  return name;
}

Weight Wtgc::final_weight(const std::string& q) const {
  auto it = finals_.find(q);
  return it == finals_.end() ? semiring_.zero() : it->second;
}

void Wtgc::set_final(const std::string& q, const Weight& w) {
  if (!(w.semiring() == semiring_)) throw SemiringError("final weight from a different semiring");
  if (w.is_zero()) {
    finals_.erase(q);
  } else {
    finals_.insert_or_assign(q, w);
  }
}

std::vector<Production> Wtgc::sorted_productions() const {
  std::vector<std::pair<std::string, const Production*>> keyed;
  keyed.reserve(productions_.size());
  for (const auto& p : productions_) keyed.emplace_back(p.id(), &p);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Production> out;
  out.reserve(keyed.size());
  for (const auto& [_, p] : keyed) out.push_back(*p);
  return out;
}

void Wtgc::add_production(Production p) {
  if (!(p.weight.semiring() == semiring_)) throw SemiringError("production weight from a different semiring");
  auto id = p.id();
  auto it = index_.find(id);
  if (it != index_.end()) {
    productions_[it->second].weight += p.weight;
    return;
  }
  index_.emplace(std::move(id), productions_.size());
  productions_.push_back(std::move(p));
}

const Production* Wtgc::find(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &productions_[it->second];
}

std::vector<const Production*> Wtgc::productions_to(const std::string& q) const {
  std::vector<const Production*> out;
  for (const auto& p : productions_) {
    if (p.target == q) out.push_back(&p);
  }
  return out;
}

bool operator==(const Wtgc& a, const Wtgc& b) {
  if (!(a.semiring_ == b.semiring_) || a.alphabet_ != b.alphabet_ || a.nonterminals_ != b.nonterminals_ ||
      a.finals_ != b.finals_ || a.productions_.size() != b.productions_.size()) {
    return false;
  }
  for (const auto& p : a.productions_) {
    const Production* other = b.find(p.id());
    if (other == nullptr || !(other->weight == p.weight)) return false;
  }
  return true;
}

// --- validation and classification -----------------------------------------

namespace {

void check_lhs(const Wtgc& g, const Tree& t, std::vector<std::string>& problems, const std::string& where) {
  if (t.is_variable()) {
    problems.push_back(where + ": variable " + t.label().name + " in lhs");
    return;
  }
  if (t.is_nonterminal()) {
    if (!g.has_nonterminal(t.label().name)) {
      problems.push_back(where + ": undeclared nonterminal " + t.label().name);
    }
    return;
  }
  auto it = g.alphabet().find(t.label().name);
  if (it == g.alphabet().end()) {
    problems.push_back(where + ": unknown symbol " + t.label().name);
  } else if (it->second != t.arity()) {
    problems.push_back(where + ": arity mismatch for " + t.label().name);
  }
  for (const auto& c : t.children()) check_lhs(g, c, problems, where);
}

bool all_children_nonterminals(const Tree& t) {
  if (!t.is_symbol()) return false;
  return std::all_of(t.children().begin(), t.children().end(), [](const Tree& c) { return c.is_nonterminal(); });
}

}  // namespace

std::vector<std::string> validate(const Wtgc& g) {
  std::vector<std::string> problems;
  for (const auto& q : g.nonterminals()) {
    if (g.alphabet().count(q) > 0) problems.push_back("name " + q + " is both a symbol and a nonterminal");
  }
  for (const auto& [q, _] : g.finals()) {
    if (!g.has_nonterminal(q)) problems.push_back("final weight for undeclared nonterminal " + q);
  }
  for (const auto& p : g.productions()) {
    const std::string where = "production '" + p.id() + "'";
    if (p.lhs.is_nonterminal()) problems.push_back(where + ": lhs is a bare nonterminal");
    check_lhs(g, p.lhs, problems, where);
    if (!g.has_nonterminal(p.target)) problems.push_back(where + ": undeclared target " + p.target);
    if (p.weight.is_zero()) problems.push_back(where + ": zero-weight production");
  }
  return problems;
}

Wtgc strip_zero(const Wtgc& g) {
  Wtgc out(g.semiring(), g.alphabet());
  for (const auto& q : g.nonterminals()) out.add_nonterminal(q);
  for (const auto& [q, w] : g.finals()) out.set_final(q, w);
  for (const auto& p : g.productions()) {
    if (!p.weight.is_zero()) out.add_production(p);
  }
  return out;
}

bool is_normalized(const Production& p) { return all_children_nonterminals(p.lhs); }

bool is_classic(const Production& p) {
  auto at_nonterminal = [&](const Position& v) {
    return has_position(p.lhs, v) && subtree(p.lhs, v).is_nonterminal();
  };
  for (const auto* set : {&p.eq, &p.ne}) {
    for (const auto& [v, w] : *set) {
      if (!at_nonterminal(v) || !at_nonterminal(w)) return false;
    }
  }
  return true;
}

GrammarFlags classify(const Wtgc& g) {
  GrammarFlags f{true, true, true, true, true, true};
  std::map<std::pair<std::string, std::string>, std::pair<ConstraintSet, ConstraintSet>> seen;
  for (const auto& p : g.productions()) {
    f.normalized = f.normalized && is_normalized(p);
    f.positive = f.positive && p.positive();
    f.classic = f.classic && is_classic(p);
    f.unconstrained = f.unconstrained && p.unconstrained();
    auto key = std::make_pair(p.lhs.to_string(), p.target);
    auto [it, inserted] = seen.emplace(key, std::make_pair(p.eq, p.ne));
    if (!inserted && (it->second.first != p.eq || it->second.second != p.ne)) f.constraint_determined = false;
  }
  for (const auto& [_, w] : g.finals()) {
    if (!w.is_zero() && !w.is_one()) f.boolean_final = false;
  }
  return f;
}

IndexConstraint index_constraints(const Production& p) {
  if (!is_classic(p)) throw PreconditionError("production '" + p.id() + "' is not classic");
  const auto d = decompose(p);
  auto index_of = [&](const Position& v) {
    auto it = std::find(d.state_positions.begin(), d.state_positions.end(), v);
    return static_cast<std::size_t>(it - d.state_positions.begin()) + 1;
  };
  IndexConstraint out;
  for (const auto& [v, w] : p.eq) out.emplace(index_of(v), index_of(w));
  return out;
}

std::optional<std::vector<std::size_t>> governing_indices(const Production& p, const std::string& sink) {
  if (!is_classic(p)) return std::nullopt;
  const auto d = decompose(p);
  const std::size_t k = d.states.size();
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (const auto& [i, j] : index_constraints(p)) parent[root(i - 1)] = root(j - 1);

  std::vector<std::size_t> governing(k, 0);
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < k; ++i) classes[root(i)].push_back(i);
  for (const auto& [_, members] : classes) {
    std::vector<std::size_t> non_sink;
    for (auto i : members) {
      if (d.states[i] != sink) non_sink.push_back(i);
    }
    std::size_t governor;
    if (non_sink.empty()) {
      if (members.size() != 1) return std::nullopt;
      governor = members.front();
    } else {
      if (non_sink.size() != 1) return std::nullopt;
      governor = non_sink.front();
    }
    for (auto i : members) governing[i] = governor + 1;
  }
  return governing;
}

namespace {

bool is_sink(const Wtgc& g, const std::string& bot) {
  if (!g.final_weight(bot).is_zero()) return false;
  std::set<std::string> covered;
  for (const auto& p : g.productions()) {
    if (p.target != bot) continue;
    if (!p.unconstrained() || !p.weight.is_one() || !p.lhs.is_symbol()) return false;
    for (const auto& c : p.lhs.children()) {
      if (!c.is_nonterminal() || c.label().name != bot) return false;
    }
    covered.insert(p.lhs.label().name);
  }
  for (const auto& [symbol, _] : g.alphabet()) {
    if (covered.count(symbol) == 0) return false;
  }
  return true;
}

}  // namespace

std::optional<EqRestriction> eq_restriction(const Wtgc& g) {
  if (!classify(g).classic) return std::nullopt;
  for (const auto& bot : g.nonterminals()) {
    if (!is_sink(g, bot)) continue;
    EqRestriction r{bot, {}};
    bool ok = true;
    for (const auto& p : g.productions()) {
      auto gov = governing_indices(p, bot);
      if (!gov) {
        ok = false;
        break;
      }
      r.governing.emplace(p.id(), std::move(*gov));
    }
    if (ok) return r;
  }
  return std::nullopt;
}

std::size_t production_height(const Wtgc& g) {
  std::size_t h = 0;
  for (const auto& p : g.productions()) h = std::max(h, p.lhs.height());
  return h;
}

}  // namespace wtgc
