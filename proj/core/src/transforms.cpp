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

#include "wtgc/transforms.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <set>

#include "wtgc/error.hpp"
#include "wtgc/semantics.hpp"

namespace wtgc {

// --- Dickson vectors --------------------------------------------------------

DicksonVector DicksonVector::plus_unit(std::size_t i) const {
  DicksonVector out = *this;
  out.entries_.at(i) = std::min(out.entries_[i] + 1, cap_);
  return out;
}

DicksonVector DicksonVector::operator+(const DicksonVector& other) const {
  if (other.dimension() != dimension() || other.cap_ != cap_) throw Error("Dickson vector shape mismatch");
  DicksonVector out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = std::min(entries_[i] + other.entries_[i], cap_);
  return out;
}

std::string DicksonVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += '.';
    out += std::to_string(entries_[i]);
  }
  return out;
}

namespace {

Wtgc shell(const Wtgc& g) { return Wtgc(g.semiring(), g.alphabet()); }

Wtgc shell(const Wtgc& g, const Semiring& semiring) { return Wtgc(semiring, g.alphabet()); }

/// `gamma(q)` -> `gamma{q}`, `sigma(q,q)` -> `sigma{q|q}`.
std::string tree_name(const Tree& t) {
  std::string out = t.label().name;
  if (t.arity() == 0) return out;
  out += '{';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i > 0) out += '|';
    out += tree_name(t.child(i));
  }
  out += '}';
  return out;
}

Tree rename_states(const Tree& lhs, const std::function<std::string(const std::string&)>& rename) {
  if (lhs.is_nonterminal()) return Tree::nonterminal(rename(lhs.label().name));
  if (lhs.arity() == 0) return lhs;
  std::vector<Tree> children;
  children.reserve(lhs.arity());
  for (const auto& c : lhs.children()) children.push_back(rename_states(c, rename));
  return Tree::symbol(lhs.label().name, std::move(children));
}

/// Replaces the nonterminal leaves of `context` (in left-to-right order of
/// the decomposition) by the given names.
Tree instantiate(const Tree& context, const std::vector<std::string>& states) {
  std::map<std::size_t, Tree> theta;
  for (std::size_t i = 0; i < states.size(); ++i) theta.emplace(i + 1, Tree::nonterminal(states[i]));
  return substitute(context, theta);
}

/// Calls f for every tuple in the product of `sizes`.
void for_each_tuple(const std::vector<std::size_t>& sizes, const std::function<void(const std::vector<std::size_t>&)>& f) {
  for (auto s : sizes) {
    if (s == 0) return;
  }
  std::vector<std::size_t> tuple(sizes.size(), 0);
  while (true) {
    f(tuple);
    std::size_t i = 0;
    while (i < tuple.size()) {
      if (++tuple[i] < sizes[i]) break;
      tuple[i] = 0;
      ++i;
    }
    if (i == tuple.size()) return;
  }
}

void require_same_shape(const Wtgc& a, const Wtgc& b) {
  if (!(a.semiring() == b.semiring())) {
    throw SemiringError("semiring descriptor mismatch: " + a.semiring().name() + " vs " + b.semiring().name());
  }
  if (a.alphabet() != b.alphabet()) {
    throw PreconditionError("alphabet mismatch: {" + format_alphabet(a.alphabet()) + "} vs {" +
                            format_alphabet(b.alphabet()) + "}");
  }
}

}  // namespace

// --- normalization ----------------------------------------------------------

Wtgc normalize(const Wtgc& g) {
  Wtgc out = shell(g);
  for (const auto& q : g.nonterminals()) out.add_nonterminal(q);
  for (const auto& [q, w] : g.finals()) out.set_final(q, w);
  std::map<Tree, std::string> abbreviation;
  std::deque<Production> pending;
  for (auto& p : g.sorted_productions()) pending.push_back(std::move(p));
  while (!pending.empty()) {
    Production p = std::move(pending.front());
    pending.pop_front();
    if (!p.lhs.is_symbol() || is_normalized(p)) {
      out.add_production(std::move(p));
      continue;
    }
    std::vector<Tree> children;
    for (const auto& c : p.lhs.children()) {
      if (c.is_nonterminal()) {
        children.push_back(c);
        continue;
      }
      auto it = abbreviation.find(c);
      if (it == abbreviation.end()) {
        const std::string name = out.fresh_nonterminal(tree_name(c));
        out.add_nonterminal(name);
        it = abbreviation.emplace(c, name).first;
        pending.push_back(Production{c, name, {}, {}, g.semiring().one()});
      }
      children.push_back(Tree::nonterminal(it->second));
    }
    out.add_production(Production{Tree::symbol(p.lhs.label().name, std::move(children)), p.target, p.eq, p.ne, p.weight});
  }
  return out;
}

Wtgc boolean_finals(const Wtgc& g) {
  Wtgc out = shell(g);
  for (const auto& q : g.nonterminals()) out.add_nonterminal(q);
  std::map<std::string, std::string> copy;
  for (const auto& [q, w] : g.finals()) {
    if (w.is_zero() || !g.has_nonterminal(q)) continue;
    const std::string c = out.fresh_nonterminal(q + "^f");
    out.add_nonterminal(c);
    out.set_final(c, g.semiring().one());
    copy.emplace(q, c);
  }
  for (const auto& p : g.sorted_productions()) {
    out.add_production(p);
    auto it = copy.find(p.target);
    if (it == copy.end()) continue;
    const Weight w = p.weight * g.final_weight(p.target);
    if (!w.is_zero()) out.add_production(Production{p.lhs, it->second, p.eq, p.ne, w});
  }
  return out;
}

// --- zero-weight derivations ------------------------------------------------

std::vector<Weight> dickson_weights(const Wtgc& g) {
  std::map<std::string, Weight> by_name;
  for (const auto& p : g.productions()) {
    if (!p.weight.is_one() && !p.weight.is_zero()) by_name.emplace(p.weight.to_string(), p.weight);
  }
  std::vector<Weight> out;
  for (auto& [_, w] : by_name) out.push_back(w);
  return out;
}

std::uint64_t dickson_cap(const Wtgc& g) {
  if (g.semiring().zero_divisor_free()) return 0;
  std::uint64_t cap = 0;
  for (const auto& w : dickson_weights(g)) cap = std::max(cap, power_profile(w).preperiod);
  return cap;
}

Wtgc eliminate_zero_derivations(const Wtgc& g) {
  const Wtgc base = strip_zero(g);
  const std::uint64_t cap = dickson_cap(base);
  if (cap == 0) return base;

  const auto weights = dickson_weights(base);
  const std::size_t n = weights.size();
  auto h = [&](const DicksonVector& v) {
    Weight w = base.semiring().one();
    for (std::size_t i = 0; i < n; ++i) w *= weights[i].pow(v[i]);
    return w;
  };
  auto unit_of = [&](const Weight& w) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < n; ++i) {
      if (weights[i] == w) return i;
    }
    return std::nullopt;
  };

  Wtgc out = shell(base);
  std::map<std::pair<std::string, DicksonVector>, std::string> names;
  std::map<std::string, std::vector<DicksonVector>> known;
  auto name_of = [&](const std::string& q, const DicksonVector& v) -> std::pair<std::string, bool> {
    auto key = std::make_pair(q, v);
    if (auto it = names.find(key); it != names.end()) return {it->second, false};
    const std::string name = out.fresh_nonterminal(q + "{" + v.to_string() + "}");
    out.add_nonterminal(name);
    out.set_final(name, base.final_weight(q));
    names.emplace(key, name);
    known[q].push_back(v);
    return {name, true};
  };

  struct Rule {
    const Production* p;
    DecomposedLhs d;
    std::optional<std::size_t> unit;
  };
  std::vector<Rule> rules;
  const auto sorted = base.sorted_productions();
  for (const auto& p : sorted) rules.push_back({&p, decompose(p), unit_of(p.weight)});

  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rules) {
      std::vector<std::size_t> sizes;
      for (const auto& s : r.d.states) sizes.push_back(known[s].size());
      for_each_tuple(sizes, [&](const std::vector<std::size_t>& tuple) {
        DicksonVector v(n, cap);
        if (r.unit) v = v.plus_unit(*r.unit);
        for (std::size_t i = 0; i < tuple.size(); ++i) v = v + known[r.d.states[i]][tuple[i]];
        if (h(v).is_zero()) return;
        std::vector<std::string> children;
        for (std::size_t i = 0; i < tuple.size(); ++i) {
          children.push_back(names.at({r.d.states[i], known[r.d.states[i]][tuple[i]]}));
        }
        auto [target, fresh] = name_of(r.p->target, v);
        Production np{instantiate(r.d.context, children), target, r.p->eq, r.p->ne, r.p->weight};
        if (out.find(np.id()) == nullptr) {
          out.add_production(std::move(np));
          changed = true;
        }
        changed = changed || fresh;
      });
    }
  }
  return out;
}

Wtgc support_grammar(const Wtgc& g) {
  if (!g.semiring().zero_sum_free()) throw SemiringError(g.semiring().name() + " is not zero-sum free");
  const Wtgc z = eliminate_zero_derivations(boolean_finals(g));
  const Semiring b = Semiring::boolean();
  Wtgc out = shell(z, b);
  for (const auto& q : z.nonterminals()) out.add_nonterminal(q);
  for (const auto& [q, w] : z.finals()) {
    if (!w.is_zero()) out.set_final(q, b.one());
  }
  for (const auto& p : z.sorted_productions()) out.add_production(Production{p.lhs, p.target, p.eq, p.ne, b.one()});
  return out;
}

// --- constraint determination, union, product -------------------------------

Wtgc constraint_determine(const Wtgc& g) {
  if (!classify(g).normalized) throw PreconditionError("constraint_determine requires a normalized grammar");
  const auto productions = g.sorted_productions();
  Wtgc out = shell(g);
  std::vector<std::string> annotated(productions.size());
  std::map<std::string, std::vector<std::size_t>> by_target;
  for (std::size_t i = 0; i < productions.size(); ++i) {
    const auto& p = productions[i];
    annotated[i] = out.fresh_nonterminal(p.target + "{p" + std::to_string(i) + "}");
    out.add_nonterminal(annotated[i]);
    out.set_final(annotated[i], g.final_weight(p.target));
    by_target[p.target].push_back(i);
  }
  for (std::size_t i = 0; i < productions.size(); ++i) {
    const auto& p = productions[i];
    std::vector<std::size_t> sizes;
    std::vector<const std::vector<std::size_t>*> options;
    for (const auto& c : p.lhs.children()) {
      options.push_back(&by_target[c.label().name]);
      sizes.push_back(options.back()->size());
    }
    for_each_tuple(sizes, [&](const std::vector<std::size_t>& tuple) {
      std::vector<Tree> children;
      for (std::size_t j = 0; j < tuple.size(); ++j) children.push_back(Tree::nonterminal(annotated[(*options[j])[tuple[j]]]));
      out.add_production(Production{Tree::symbol(p.lhs.label().name, std::move(children)), annotated[i], p.eq, p.ne, p.weight});
    });
  }
  return out;
}

Wtgc disjoint_union(const Wtgc& g1, const Wtgc& g2) {
  require_same_shape(g1, g2);
  Wtgc out = shell(g1);
  for (const auto& q : g1.nonterminals()) out.add_nonterminal(q);
  for (const auto& [q, w] : g1.finals()) out.set_final(q, w);
  for (const auto& p : g1.productions()) out.add_production(p);
  std::map<std::string, std::string> rename;
  for (const auto& q : g2.nonterminals()) {
    std::string name = q;
    while (out.has_nonterminal(name) || g2.alphabet().count(name) > 0 ||
           (name != q && g2.has_nonterminal(name))) {
      name += '\'';
    }
    out.add_nonterminal(name);
    rename.emplace(q, name);
  }
  auto r = [&](const std::string& q) { return rename.at(q); };
  for (const auto& [q, w] : g2.finals()) out.set_final(r(q), w);
  for (const auto& p : g2.productions()) out.add_production(Production{rename_states(p.lhs, r), r(p.target), p.eq, p.ne, p.weight});
  return out;
}

namespace {

Wtgc prepare_for_product(const Wtgc& g) {
  Wtgc a = classify(g).normalized ? g : normalize(g);
  if (!classify(a).constraint_determined) a = constraint_determine(a);
  return strip_zero(a);
}

}  // namespace

Wtgc hadamard(const Wtgc& g1, const Wtgc& g2) {
  require_same_shape(g1, g2);
  const Wtgc a = prepare_for_product(g1);
  const Wtgc b = prepare_for_product(g2);
  const auto pa = a.sorted_productions();
  const auto pb = b.sorted_productions();
  std::map<std::string, std::vector<std::size_t>> sym_b;
  for (std::size_t j = 0; j < pb.size(); ++j) sym_b[pb[j].lhs.label().name].push_back(j);

  Wtgc out = shell(a);
  std::map<std::pair<std::string, std::string>, std::string> names;
  auto name_of = [&](const std::string& q, const std::string& z) -> std::pair<std::string, bool> {
    auto key = std::make_pair(q, z);
    if (auto it = names.find(key); it != names.end()) return {it->second, false};
    const std::string name = out.fresh_nonterminal(q + "~" + z);
    out.add_nonterminal(name);
    out.set_final(name, a.final_weight(q) * b.final_weight(z));
    names.emplace(key, name);
    return {name, true};
  };
  std::set<std::pair<std::size_t, std::size_t>> done;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < pa.size(); ++i) {
      auto it = sym_b.find(pa[i].lhs.label().name);
      if (it == sym_b.end()) continue;
      for (auto j : it->second) {
        if (done.count({i, j}) > 0) continue;
        const auto& p = pa[i];
        const auto& r = pb[j];
        if (p.lhs.arity() != r.lhs.arity()) continue;
        std::vector<Tree> children;
        bool ready = true;
        for (std::size_t c = 0; c < p.lhs.arity() && ready; ++c) {
          auto n = names.find({p.lhs.child(c).label().name, r.lhs.child(c).label().name});
          if (n == names.end()) {
            ready = false;
          } else {
            children.push_back(Tree::nonterminal(n->second));
          }
        }
        if (!ready) continue;
        done.insert({i, j});
        const Weight w = p.weight * r.weight;
        if (w.is_zero()) continue;
        auto [target, fresh] = name_of(p.target, r.target);
        ConstraintSet eq = p.eq;
        eq.insert(r.eq.begin(), r.eq.end());
        ConstraintSet ne = p.ne;
        ne.insert(r.ne.begin(), r.ne.end());
        out.add_production(Production{Tree::symbol(p.lhs.label().name, std::move(children)), target, std::move(eq), std::move(ne), w});
        changed = true;
        (void)fresh;
      }
    }
  }
  return out;
}

// --- disambiguation -----------------------------------------------------------

std::string vector_state_name(const std::vector<std::string>& names, const std::vector<Weight>& values) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (values[i].is_zero()) continue;
    if (!first) out += '|';
    first = false;
    out += names[i];
    if (values[i].semiring().kind() != Semiring::Kind::boolean) out += "=" + values[i].to_string();
  }
  return out + "}";
}

Wtgc disambiguate(const Wtgc& g, const SemiringHom& h, const DisambiguateOptions& options) {
  if (!classify(g).normalized) throw PreconditionError("disambiguate requires a normalized grammar (WTAc)");
  if (!h.target.finite()) throw SemiringError("disambiguate requires a finite target semiring, got " + h.target.name());
  if (!(h.source == g.semiring())) throw SemiringError("homomorphism source does not match the grammar semiring");
  const Semiring& t = h.target;

  std::vector<std::string> qnames(g.nonterminals().begin(), g.nonterminals().end());
  std::map<std::string, std::size_t> qindex;
  for (std::size_t i = 0; i < qnames.size(); ++i) qindex.emplace(qnames[i], i);

  struct Rule {
    std::size_t target;
    std::vector<std::size_t> states;
    ConstraintSet eq;
    ConstraintSet ne;
    Weight weight;
  };
  std::map<std::string, std::vector<Rule>> rules;
  std::map<std::string, std::vector<Constraint>> universe;
  for (const auto& p : g.sorted_productions()) {
    if (p.weight.is_zero()) continue;
    Rule r{qindex.at(p.target), {}, p.eq, p.ne, options.unit_weights ? t.one() : h(p.weight)};
    for (const auto& c : p.lhs.children()) r.states.push_back(qindex.at(c.label().name));
    const auto& sym = p.lhs.label().name;
    auto& u = universe[sym];
    u.insert(u.end(), p.eq.begin(), p.eq.end());
    u.insert(u.end(), p.ne.begin(), p.ne.end());
    rules[sym].push_back(std::move(r));
  }
  for (auto& [_, u] : universe) {
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
  }
  if (std::any_of(universe.begin(), universe.end(), [](const auto& e) { return e.second.size() > 20; })) {
    throw PreconditionError("constraint universe too large for disambiguation");
  }

  std::map<std::string, std::vector<Tree>> probe_trees;
  if (options.prune_unsat) {
    for (const auto& tr : enumerate_trees(g.alphabet(), options.probe_size)) probe_trees[tr.label().name].push_back(tr);
  }
  std::map<std::pair<std::string, std::uint64_t>, bool> realizable;
  auto split_realizable = [&](const std::string& sym, std::uint64_t mask, const ConstraintSet& eq, const ConstraintSet& ne) {
    if (!options.prune_unsat || (eq.empty() && ne.empty())) return true;
    auto key = std::make_pair(sym, mask);
    if (auto it = realizable.find(key); it != realizable.end()) return it->second;
    bool ok = false;
    for (const auto& tr : probe_trees[sym]) {
      if (satisfies_all(tr, eq) && dissatisfies_all(tr, ne)) {
        ok = true;
        break;
      }
    }
    realizable.emplace(key, ok);
    return ok;
  };

  Wtgc out(t, g.alphabet());
  std::vector<std::vector<Weight>> states;
  std::map<std::vector<Weight>, std::string> names;
  std::set<std::string> used_names;
  auto state_of = [&](const std::vector<Weight>& phi) -> std::string {
    if (auto it = names.find(phi); it != names.end()) return it->second;
    if (states.size() >= options.max_states) {
      throw Error("disambiguation exceeded the state cap of " + std::to_string(options.max_states));
    }
    std::string name = vector_state_name(qnames, phi);
    while (used_names.count(name) > 0 || g.alphabet().count(name) > 0) name += '\'';
    used_names.insert(name);
    names.emplace(phi, name);
    states.push_back(phi);
    out.add_nonterminal(name);
    Weight f = t.zero();
    for (std::size_t q = 0; q < qnames.size(); ++q) f += h(g.final_weight(qnames[q])) * phi[q];
    out.set_final(name, f);
    return name;
  };

  // Each round combines at least one state discovered in the previous
  // round; constants are handled in the first round only.
  std::size_t processed = 0;
  bool first_round = true;
  while (first_round || processed < states.size()) {
    const bool constants = first_round;
    first_round = false;
    const std::size_t old = processed;
    const std::size_t current = states.size();
    processed = current;
    for (const auto& [sym, rank] : g.alphabet()) {
      const auto& u = universe[sym];
      const auto& syms_rules = rules[sym];
      std::vector<std::size_t> sizes(rank, current);
      for_each_tuple(sizes, [&](const std::vector<std::size_t>& tuple) {
        if (rank > 0 && std::all_of(tuple.begin(), tuple.end(), [&](std::size_t s) { return s < old; })) return;
        if (rank == 0 && !constants) return;
        std::vector<std::vector<Weight>> children;
        std::vector<Tree> child_trees;
        for (auto s : tuple) {
          children.push_back(states[s]);
          child_trees.push_back(Tree::nonterminal(names.at(states[s])));
        }
        const Tree lhs = Tree::symbol(sym, child_trees);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u.size()); ++mask) {
          ConstraintSet eq;
          ConstraintSet ne;
          for (std::size_t b = 0; b < u.size(); ++b) ((mask >> b) & 1U ? eq : ne).insert(u[b]);
          if (!split_realizable(sym, mask, eq, ne)) continue;
          std::vector<Weight> phi(qnames.size(), t.zero());
          for (const auto& r : syms_rules) {
            if (!std::includes(eq.begin(), eq.end(), r.eq.begin(), r.eq.end())) continue;
            if (!std::includes(ne.begin(), ne.end(), r.ne.begin(), r.ne.end())) continue;
            Weight w = r.weight;
            for (std::size_t i = 0; i < r.states.size() && !w.is_zero(); ++i) w *= children[i][r.states[i]];
            phi[r.target] += w;
          }
          const std::string target = state_of(phi);
          out.add_production(Production{lhs, target, std::move(eq), std::move(ne), t.one()});
        }
      });
    }
  }
  return out;
}

Wtgc support_automaton(const Wtgc& g, const DisambiguateOptions& options) {
  const SemiringHom h = support_hom(g.semiring());
  const Wtgc prepared = eliminate_zero_derivations(boolean_finals(normalize(g)));
  DisambiguateOptions o = options;
  o.unit_weights = true;
  return disambiguate(prepared, h, o);
}

Wtgc complement_support(const Wtgc& g, const DisambiguateOptions& options) {
  const Wtgc s = support_automaton(g, options);
  Wtgc out(s.semiring(), s.alphabet());
  for (const auto& q : s.nonterminals()) {
    out.add_nonterminal(q);
    out.set_final(q, s.final_weight(q).is_zero() ? s.semiring().one() : s.semiring().zero());
  }
  for (const auto& p : s.productions()) out.add_production(p);
  return out;
}

Wtgc lift_boolean(const Wtgc& g, const Semiring& target) {
  if (g.semiring().kind() != Semiring::Kind::boolean) throw SemiringError("lift_boolean expects a Boolean grammar");
  auto lift = [&](const Weight& w) { return w.is_zero() ? target.zero() : target.one(); };
  Wtgc out(target, g.alphabet());
  for (const auto& q : g.nonterminals()) out.add_nonterminal(q);
  for (const auto& [q, w] : g.finals()) out.set_final(q, lift(w));
  for (const auto& p : g.productions()) {
    if (!p.weight.is_zero()) out.add_production(Production{p.lhs, p.target, p.eq, p.ne, lift(p.weight)});
  }
  return out;
}

Wtgc restrict_support(const Wtgc& g, const Wtgc& g2) {
  if (g.alphabet() != g2.alphabet()) throw PreconditionError("alphabet mismatch");
  if (!(g.semiring() == g2.semiring())) throw SemiringError("semiring descriptor mismatch");
  if (!g.semiring().zero_sum_free()) throw SemiringError(g.semiring().name() + " is not zero-sum free");
  return hadamard(g, lift_boolean(support_automaton(g2), g.semiring()));
}

// --- relabeling ---------------------------------------------------------------

Wtgc relabel(const Wtgc& g, const std::map<std::string, std::string>& pi, const RankedAlphabet& target) {
  const auto restriction = eq_restriction(g);
  if (!restriction) throw PreconditionError("relabel requires an eq-restricted grammar");
  if (!classify(g).positive) throw PreconditionError("relabel requires a positive grammar");
  for (const auto& [from, _] : pi) {
    if (g.alphabet().count(from) == 0) throw PreconditionError("relabeling of unknown symbol " + from);
  }
  auto image = [&](const std::string& s) {
    auto it = pi.find(s);
    return it == pi.end() ? s : it->second;
  };
  RankedAlphabet delta = target;
  for (const auto& [sym, rank] : g.alphabet()) {
    const std::string d = image(sym);
    if (target.empty()) {
      auto [it, inserted] = delta.emplace(d, rank);
      if (!inserted && it->second != rank) throw PreconditionError("relabeling is not rank-preserving at " + d);
    } else {
      auto it = target.find(d);
      if (it == target.end() || it->second != rank) {
        throw PreconditionError("relabeling maps " + sym + " outside the target alphabet or changes its rank");
      }
    }
  }
  const std::string& sink = restriction->sink;
  Wtgc out(g.semiring(), delta);
  for (const auto& q : g.nonterminals()) out.add_nonterminal(q);
  for (const auto& [q, w] : g.finals()) out.set_final(q, w);
  std::function<Tree(const Tree&)> map_tree = [&](const Tree& t) {
    if (!t.is_symbol()) return t;
    std::vector<Tree> children;
    for (const auto& c : t.children()) children.push_back(map_tree(c));
    return Tree::symbol(image(t.label().name), std::move(children));
  };
  for (const auto& p : g.sorted_productions()) {
    if (p.target == sink) continue;
    out.add_production(Production{map_tree(p.lhs), p.target, p.eq, p.ne, p.weight});
  }
  for (const auto& [d, rank] : delta) {
    out.add_production(Production{Tree::symbol(d, std::vector<Tree>(rank, Tree::nonterminal(sink))), sink, {}, {}, g.semiring().one()});
  }
  return strip_zero(out);
}

}  // namespace wtgc
