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

#include "wtgc/homomorphism.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "wtgc/error.hpp"
#include "wtgc/io.hpp"
#include "wtgc/semantics.hpp"
#include "wtgc/transforms.hpp"

namespace wtgc {

namespace {

void collect_variables(const Tree& t, std::set<std::size_t>& out) {
  if (t.is_variable()) {
    out.insert(t.label().index);
    return;
  }
  for (const auto& c : t.children()) collect_variables(c, out);
}

std::string check_rhs(const Tree& t, std::size_t rank, const RankedAlphabet& target) {
  if (t.is_variable()) return t.label().index <= rank ? std::string{} : "variable " + t.label().name + " exceeds rank";
  if (!t.is_symbol()) return "nonterminal " + t.label().name + " in a right-hand side";
  auto it = target.find(t.label().name);
  if (it == target.end()) return "unknown target symbol " + t.label().name;
  if (it->second != t.arity()) return "arity mismatch for " + t.label().name;
  for (const auto& c : t.children()) {
    if (auto m = check_rhs(c, rank, target); !m.empty()) return m;
  }
  return {};
}

}  // namespace

TreeHom::TreeHom(RankedAlphabet source, RankedAlphabet target, std::map<std::string, Tree> rhs)
    : source_(std::move(source)), target_(std::move(target)), rhs_(std::move(rhs)) {
  for (const auto& [sym, rank] : source_) {
    auto it = rhs_.find(sym);
    if (it == rhs_.end()) throw PreconditionError("no right-hand side for " + sym);
    if (auto m = check_rhs(it->second, rank, target_); !m.empty()) throw PreconditionError(sym + ": " + m);
    std::set<std::size_t> vars;
    collect_variables(it->second, vars);
    if (vars.size() != rank) nondeleting_ = false;
    if (it->second.is_variable()) nonerasing_ = false;
  }
  for (const auto& [sym, _] : rhs_) {
    if (source_.count(sym) == 0) throw PreconditionError("right-hand side for unknown symbol " + sym);
  }
}

const Tree& TreeHom::rhs(const std::string& symbol) const {
  auto it = rhs_.find(symbol);
  if (it == rhs_.end()) throw PreconditionError("unknown symbol " + symbol);
  return it->second;
}

// --- file format ------------------------------------------------------------

namespace {

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

RankedAlphabet parse_ranks(std::string_view rest, std::size_t line, std::size_t column) {
  RankedAlphabet out;
  std::istringstream in{std::string(rest)};
  std::string word;
  while (in >> word) {
    const auto colon = word.rfind(':');
    const std::string rank = colon == std::string::npos ? std::string{} : word.substr(colon + 1);
    if (colon == 0 || rank.empty() ||
        !std::all_of(rank.begin(), rank.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw ParseError("expected name:rank", line, column);
    }
    out[word.substr(0, colon)] = static_cast<std::size_t>(std::stoull(rank));
  }
  return out;
}

std::size_t max_variable(const Tree& t) {
  std::set<std::size_t> vars;
  collect_variables(t, vars);
  return vars.empty() ? 0 : *vars.rbegin();
}

}  // namespace

TreeHom parse_hom(std::string_view text) {
  bool header = false;
  std::optional<RankedAlphabet> source;
  std::optional<RankedAlphabet> target;
  RankedAlphabet collected;
  std::map<std::string, Tree> rules;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const auto raw = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto stripped = strip_comment(raw);
    const auto line = trim_view(stripped);
    if (line.empty()) continue;
    const std::size_t column = static_cast<std::size_t>(line.data() - raw.data()) + 1;
    if (!header) {
      if (line != "hom") throw ParseError("expected 'hom' header", line_no, column);
      header = true;
      continue;
    }
    const auto space = line.find_first_of(" \t");
    const auto keyword = line.substr(0, space);
    if ((keyword == "source" || keyword == "target") && line.find("->") == std::string_view::npos) {
      if (!rules.empty()) throw ParseError("alphabets must precede the rules", line_no, column);
      auto ranks = parse_ranks(space == std::string_view::npos ? std::string_view{} : line.substr(space), line_no, column);
      (keyword == "source" ? source : target) = std::move(ranks);
      continue;
    }
    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) throw ParseError("expected 'symbol -> term'", line_no, column);
    const std::string symbol(trim_view(line.substr(0, arrow)));
    if (symbol.empty()) throw ParseError("expected a symbol before '->'", line_no, column);
    if (rules.count(symbol) > 0) throw ParseError("duplicate rule for " + symbol, line_no, column);
    TermOptions options;
    options.variables = true;
    options.alphabet = target ? &*target : nullptr;
    options.collect = &collected;
    const auto rhs_text = line.substr(arrow + 2);
    Tree rhs = parse_term(rhs_text, options, line_no, column + arrow + 2);
    if (source) {
      auto it = source->find(symbol);
      if (it == source->end()) throw ParseError("unknown symbol " + symbol, line_no, column);
      if (max_variable(rhs) > it->second) throw ParseError("variable exceeds the rank of " + symbol, line_no, column);
    }
    rules.emplace(symbol, std::move(rhs));
  }
  if (!header) throw ParseError("missing 'hom' header", line_no == 0 ? 1 : line_no, 1);
  RankedAlphabet src;
  if (source) {
    src = *source;
  } else {
    for (const auto& [sym, rhs] : rules) src[sym] = max_variable(rhs);
  }
  try {
    return TreeHom(std::move(src), target ? *target : collected, std::move(rules));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), line_no, 1);
  }
}

std::string serialize_hom(const TreeHom& h) {
  std::ostringstream out;
  out << "hom\nsource";
  for (const auto& [name, rank] : h.source()) out << ' ' << name << ':' << rank;
  out << "\ntarget";
  for (const auto& [name, rank] : h.target()) out << ' ' << name << ':' << rank;
  out << '\n';
  for (const auto& [sym, rhs] : h.rules()) out << sym << " -> " << rhs << '\n';
  return out.str();
}

// --- apply and preimage -----------------------------------------------------

Tree apply(const TreeHom& h, const Tree& t) {
  if (!t.is_symbol()) throw PreconditionError("apply expects a ground tree");
  auto it = h.source().find(t.label().name);
  if (it == h.source().end()) throw PreconditionError("unknown symbol " + t.label().name);
  if (it->second != t.arity()) throw PreconditionError("arity mismatch for " + t.label().name);
  std::map<std::size_t, Tree> theta;
  for (std::size_t i = 0; i < t.arity(); ++i) theta.emplace(i + 1, apply(h, t.child(i)));
  return substitute(h.rhs(t.label().name), theta);
}

namespace {

bool match_pattern(const Tree& pattern, const Tree& u, std::vector<std::optional<Tree>>& binding) {
  if (pattern.is_variable()) {
    auto& slot = binding[pattern.label().index - 1];
    if (slot) return *slot == u;
    slot = u;
    return true;
  }
  if (!u.is_symbol() || pattern.label().name != u.label().name || pattern.arity() != u.arity()) return false;
  for (std::size_t i = 0; i < u.arity(); ++i) {
    if (!match_pattern(pattern.child(i), u.child(i), binding)) return false;
  }
  return true;
}

void require_finitary(const TreeHom& h) {
  if (!h.nondeleting()) throw PreconditionError("homomorphism is deleting");
  if (!h.nonerasing()) throw PreconditionError("homomorphism is erasing");
}

struct Preimage {
  const TreeHom& h;
  std::unordered_map<Tree, std::vector<Tree>, TreeHash> memo;

  const std::vector<Tree>& run(const Tree& u) {
    if (auto it = memo.find(u); it != memo.end()) return it->second;
    std::vector<Tree> out;
    for (const auto& [sym, rank] : h.source()) {
      std::vector<std::optional<Tree>> binding(rank);
      if (!match_pattern(h.rhs(sym), u, binding)) continue;
      std::vector<const std::vector<Tree>*> parts;
      bool empty = false;
      for (const auto& b : binding) {
        parts.push_back(&run(*b));
        if (parts.back()->empty()) empty = true;
      }
      if (empty) continue;
      std::vector<Tree> current;
      std::function<void(std::size_t)> combine = [&](std::size_t i) {
        if (i == parts.size()) {
          out.push_back(Tree::symbol(sym, current));
          return;
        }
        for (const auto& t : *parts[i]) {
          current.push_back(t);
          combine(i + 1);
          current.pop_back();
        }
      };
      combine(0);
    }
    std::sort(out.begin(), out.end(), CanonicalTreeLess{});
    return memo.emplace(u, std::move(out)).first->second;
  }
};

}  // namespace

std::vector<Tree> preimage(const TreeHom& h, const Tree& u) {
  require_finitary(h);
  Preimage p{h, {}};
  return p.run(u);
}

Weight image_weight_oracle(const TreeHom& h, const Wtgc& g, const Tree& u) {
  Evaluator ev(g);
  Weight total = g.semiring().zero();
  for (const auto& t : preimage(h, u)) total += ev.evaluate(t);
  return total;
}

// --- image construction -----------------------------------------------------

std::string annotated_symbol(const std::string& delta, std::size_t index) {
  return delta + "#p" + std::to_string(index);
}

namespace {

/// Replaces the variables of `rhs` below the root: the left-most occurrence
/// of x_i by q_i, the others by the sink.  Fills `eq` with the pairs
/// (left-most occurrence, other occurrence).
Tree annotate_rhs(const Tree& rhs, const std::string& root, const std::vector<std::string>& states,
                  const std::string& sink, ConstraintSet& eq) {
  std::map<std::size_t, Position> first;
  std::function<Tree(const Tree&, const Position&)> walk = [&](const Tree& t, const Position& w) -> Tree {
    if (t.is_variable()) {
      const std::size_t i = t.label().index;
      auto [it, inserted] = first.emplace(i, w);
      if (inserted) return Tree::nonterminal(states[i - 1]);
      eq.emplace(it->second, w);
      return Tree::nonterminal(sink);
    }
    std::vector<Tree> children;
    for (std::size_t j = 0; j < t.arity(); ++j) children.push_back(walk(t.child(j), w.child(j + 1)));
    return Tree::symbol(w.is_root() ? root : t.label().name, std::move(children));
  };
  return walk(rhs, Position{});
}

}  // namespace

Wtgc image_grammar_stage_one(const Wtgc& g, const TreeHom& h) {
  require_finitary(h);
  const auto flags = classify(g);
  if (!flags.normalized || !flags.unconstrained) throw PreconditionError("image construction requires a WTA");
  for (const auto& [sym, rank] : g.alphabet()) {
    auto it = h.source().find(sym);
    if (it == h.source().end() || it->second != rank) {
      throw PreconditionError("symbol " + sym + " is not in the source alphabet of the homomorphism");
    }
  }
  Wtgc out(g.semiring(), h.target());
  for (const auto& q : g.nonterminals()) out.add_nonterminal(q);
  const std::string sink = out.fresh_nonterminal("bot");
  out.add_nonterminal(sink);
  for (const auto& [q, w] : g.finals()) out.set_final(q, w);
  const auto productions = g.sorted_productions();
  for (std::size_t idx = 0; idx < productions.size(); ++idx) {
    const auto& p = productions[idx];
    if (p.weight.is_zero()) continue;
    const auto d = decompose(p);
    const Tree& rhs = h.rhs(p.lhs.label().name);
    const std::string root = annotated_symbol(rhs.label().name, idx);
    out.add_symbol(root, rhs.arity());
    ConstraintSet eq;
    Tree lhs = annotate_rhs(rhs, root, d.states, sink, eq);
    out.add_production(Production{std::move(lhs), p.target, std::move(eq), {}, p.weight});
  }
  for (const auto& [sym, rank] : out.alphabet()) {
    out.add_production(
        Production{Tree::symbol(sym, std::vector<Tree>(rank, Tree::nonterminal(sink))), sink, {}, {}, g.semiring().one()});
  }
  return out;
}

Wtgc image_grammar(const Wtgc& g, const TreeHom& h) {
  const Wtgc stage_one = image_grammar_stage_one(g, h);
  std::map<std::string, std::string> pi;
  for (const auto& [sym, _] : stage_one.alphabet()) {
    const auto hash = sym.rfind("#p");
    if (h.target().count(sym) == 0 && hash != std::string::npos) pi.emplace(sym, sym.substr(0, hash));
  }
  return relabel(stage_one, pi, h.target());
}

}  // namespace wtgc
