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

#include "wtgc/semantics.hpp"

#include <functional>
#include <map>

#include "wtgc/error.hpp"

namespace wtgc {

std::string Derivation::to_string() const {
  std::string out;
  for (const auto& s : steps) {
    if (!out.empty()) out += ' ';
    out += "(" + s.production + " @ " + s.position.to_string() + ")";
  }
  return out;
}

namespace {

bool match_into(const Tree& c, const Tree& t, std::vector<Tree>& out) {
  if (c.is_variable()) {
    out.push_back(t);
    return true;
  }
  if (!t.is_symbol() || c.label().name != t.label().name || c.arity() != t.arity()) return false;
  for (std::size_t i = 0; i < c.arity(); ++i) {
    if (!match_into(c.child(i), t.child(i), out)) return false;
  }
  return true;
}

}  // namespace

bool match_context(const Tree& context, const Tree& t, std::vector<Tree>& subtrees) {
  subtrees.clear();
  return match_into(context, t, subtrees);
}

bool constraints_hold(const Production& p, const Tree& t) {
  return satisfies_all(t, p.eq) && dissatisfies_all(t, p.ne);
}

// --- Evaluator --------------------------------------------------------------

Evaluator::Evaluator(const Wtgc& g) : g_(g) {
  for (const auto& q : g_.nonterminals()) {
    index_.emplace(q, names_.size());
    names_.push_back(q);
  }
  for (const auto& p : g_.productions()) {
    if (p.weight.is_zero() || !p.lhs.is_symbol()) continue;
    const auto d = decompose(p);
    Rule r{&p, d.context, {}};
    bool known = index_.count(p.target) > 0;
    for (const auto& s : d.states) {
      auto it = index_.find(s);
      if (it == index_.end()) {
        known = false;
        break;
      }
      r.states.push_back(it->second);
    }
    if (known) by_symbol_[p.lhs.label().name].push_back(std::move(r));
  }
}

std::size_t Evaluator::index_of(const std::string& q) const {
  auto it = index_.find(q);
  if (it == index_.end()) throw PreconditionError("unknown nonterminal " + q);
  return it->second;
}

const std::vector<Weight>& Evaluator::state_weights(const Tree& t) {
  if (auto it = memo_.find(t); it != memo_.end()) return it->second;
  std::vector<Weight> result(names_.size(), g_.semiring().zero());
  auto rules = by_symbol_.find(t.label().name);
  if (t.is_symbol() && rules != by_symbol_.end()) {
    std::vector<Tree> parts;
    for (const auto& r : rules->second) {
      if (!match_context(r.context, t, parts)) continue;
      if (!constraints_hold(*r.production, t)) continue;
      Weight w = r.production->weight;
      for (std::size_t i = 0; i < parts.size() && !w.is_zero(); ++i) {
        w *= state_weights(parts[i])[r.states[i]];
      }
      const std::size_t target = index_.at(r.production->target);
      result[target] += w;
    }
  }
  return memo_.emplace(t, std::move(result)).first->second;
}

Weight Evaluator::state_weight(const std::string& q, const Tree& t) { return state_weights(t)[index_of(q)]; }

Weight Evaluator::evaluate(const Tree& t) {
  Weight total = g_.semiring().zero();
  const auto& weights = state_weights(t);
  for (const auto& [q, f] : g_.finals()) {
    auto it = index_.find(q);
    if (it != index_.end()) total += f * weights[it->second];
  }
  return total;
}

Weight state_weight(const Wtgc& g, const std::string& q, const Tree& t) { return Evaluator(g).state_weight(q, t); }

Weight evaluate(const Wtgc& g, const Tree& t) { return Evaluator(g).evaluate(t); }

// --- derivations ------------------------------------------------------------

namespace {

using StepList = std::vector<DerivationStep>;

struct Enumerator {
  const Wtgc& g;
  std::map<std::pair<std::string, std::string>, std::vector<StepList>> memo;

  const std::vector<StepList>& run(const Tree& t, const std::string& q) {
    auto key = std::make_pair(t.to_string(), q);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<StepList> out;
    std::vector<Tree> parts;
    for (const auto& p : g.productions()) {
      if (p.target != q || !p.lhs.is_symbol()) continue;
      const auto d = decompose(p);
      if (!match_context(d.context, t, parts) || !constraints_hold(p, t)) continue;
      std::vector<const std::vector<StepList>*> children;
      bool empty = false;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        children.push_back(&run(parts[i], d.states[i]));
        if (children.back()->empty()) empty = true;
      }
      if (empty) continue;
      StepList current;
      std::function<void(std::size_t)> combine = [&](std::size_t i) {
        if (i == children.size()) {
          StepList full = current;
          full.push_back({p.id(), Position{}});
          out.push_back(std::move(full));
          return;
        }
        for (const auto& sub : *children[i]) {
          const std::size_t mark = current.size();
          for (const auto& s : sub) current.push_back({s.production, d.state_positions[i].concat(s.position)});
          combine(i + 1);
          current.resize(mark);
        }
      };
      combine(0);
    }
    return memo.emplace(std::move(key), std::move(out)).first->second;
  }
};

}  // namespace

std::vector<Derivation> derivations(const Wtgc& g, const Tree& t, const std::string& q) {
  Enumerator e{g, {}};
  std::vector<Derivation> out;
  for (const auto& steps : e.run(t, q)) out.push_back(Derivation{t, q, steps});
  return out;
}

std::uint64_t count_derivations(const Wtgc& g, const Tree& t, const std::string& q) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::unordered_map<Tree, std::map<std::string, std::uint64_t>, TreeHash> memo;
  std::vector<std::pair<const Production*, DecomposedLhs>> rules;
  for (const auto& p : g.productions()) {
    if (p.lhs.is_symbol()) rules.emplace_back(&p, decompose(p));
  }
  std::function<std::uint64_t(const Tree&, const std::string&)> count = [&](const Tree& s, const std::string& r) {
    if (auto it = memo.find(s); it != memo.end()) {
      if (auto jt = it->second.find(r); jt != it->second.end()) return jt->second;
    }
    std::uint64_t total = 0;
    std::vector<Tree> parts;
    for (const auto& [p, d] : rules) {
      if (p->target != r || !match_context(d.context, s, parts) || !constraints_hold(*p, s)) continue;
      std::uint64_t product = 1;
      const auto local = parts;
      for (std::size_t i = 0; i < local.size() && product != 0; ++i) {
        const std::uint64_t c = count(local[i], d.states[i]);
        product = (c != 0 && product > kMax / c) ? kMax : product * c;
      }
      total = (total > kMax - product) ? kMax : total + product;
    }
    memo[s][r] = total;
    return total;
  };
  return count(t, q);
}

Weight derivation_weight(const Wtgc& g, const Derivation& d) {
  Weight w = g.semiring().one();
  for (const auto& s : d.steps) {
    const Production* p = g.find(s.production);
    if (p == nullptr) throw PreconditionError("foreign production '" + s.production + "'");
    w *= p->weight;
  }
  return w;
}

std::string replay(const Wtgc& g, const Derivation& d) {
  Tree form = d.input;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const auto& s = d.steps[i];
    const Production* p = g.find(s.production);
    if (p == nullptr) return "step " + std::to_string(i + 1) + ": foreign production '" + s.production + "'";
    if (i > 0 && !leftmost_before(d.steps[i - 1].position, s.position)) {
      return "step " + std::to_string(i + 1) + ": not in left-most order";
    }
    if (!has_position(form, s.position) || !(subtree(form, s.position) == p->lhs)) {
      return "step " + std::to_string(i + 1) + ": lhs does not match at " + s.position.to_string();
    }
    if (!constraints_hold(*p, subtree(d.input, s.position))) {
      return "step " + std::to_string(i + 1) + ": constraints violated at " + s.position.to_string();
    }
    form = replace(form, Tree::nonterminal(p->target), s.position);
  }
  if (!form.is_nonterminal() || form.label().name != d.target) return "derivation is not complete to " + d.target;
  return {};
}

namespace {

std::string target_of(const std::string& id) {
  const auto arrow = id.find(" -> ");
  if (arrow == std::string::npos) return {};
  const auto start = arrow + 4;
  const auto end = id.find(' ', start);
  return id.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

}  // namespace

Derivation incorporated(const Derivation& d, const Position& w) {
  if (!has_position(d.input, w)) throw InvalidPosition("position " + w.to_string() + " not in the input");
  Derivation out{subtree(d.input, w), {}, {}};
  for (const auto& s : d.steps) {
    if (w.is_prefix_of(s.position)) {
      out.steps.push_back({s.production, s.position.drop_prefix(w.length())});
      if (s.position == w) out.target = target_of(s.production);
    }
  }
  return out;
}

std::optional<Tree> check_unambiguous_upto(const Wtgc& g, std::size_t max_size) {
  for (const auto& t : enumerate_trees(g.alphabet(), max_size)) {
    std::uint64_t total = 0;
    for (const auto& [q, f] : g.finals()) {
      if (f.is_zero()) continue;
      total += count_derivations(g, t, q);
      if (total > 1) return t;
    }
  }
  return std::nullopt;
}

}  // namespace wtgc
