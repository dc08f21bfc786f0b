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

#ifndef WTGC_GRAMMAR_HPP
#define WTGC_GRAMMAR_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wtgc/semiring.hpp"
#include "wtgc/trees.hpp"

namespace wtgc {

/// A production lhs --E,I--> target with a weight.
struct Production {
  Tree lhs;
  std::string target;
  ConstraintSet eq;
  ConstraintSet ne;
  Weight weight;

  /// Stable identifier: `lhs -> target [eq ...] [ne ...]` (no weight).
  std::string id() const;
  bool positive() const noexcept { return ne.empty(); }
  bool unconstrained() const noexcept { return eq.empty() && ne.empty(); }
};

/// lhs = context[states...], with the context variables x1..xk in
/// left-to-right order.
struct DecomposedLhs {
  Tree context;
  std::vector<std::string> states;
  /// Position of x_i in the context, for i = 1..k.
  std::vector<Position> state_positions;
};

DecomposedLhs decompose(const Production& p);

/// Weighted tree grammar with constraints over one of the shipped semirings.
///
/// Productions are unique by identifier; adding a production whose
/// identifier is already present adds the weights.
class Wtgc {
 public:
  explicit Wtgc(Semiring semiring, RankedAlphabet alphabet = {});

  const Semiring& semiring() const noexcept { return semiring_; }
  const RankedAlphabet& alphabet() const noexcept { return alphabet_; }
  void add_symbol(const std::string& name, std::size_t rank);

  const std::set<std::string>& nonterminals() const noexcept { return nonterminals_; }
  bool has_nonterminal(const std::string& q) const { return nonterminals_.count(q) > 0; }
  void add_nonterminal(const std::string& q);
  /// A name not yet used as nonterminal or symbol, derived from `base`.
  std::string fresh_nonterminal(const std::string& base) const;

  /// F_q; the semiring zero when unset.
  Weight final_weight(const std::string& q) const;
  void set_final(const std::string& q, const Weight& w);
  /// Nonzero final weights only.
  const std::map<std::string, Weight>& finals() const noexcept { return finals_; }

  const std::vector<Production>& productions() const noexcept { return productions_; }
  /// Productions sorted by identifier.
  std::vector<Production> sorted_productions() const;
  void add_production(Production p);
  const Production* find(const std::string& id) const;
  /// Productions whose target is q.
  std::vector<const Production*> productions_to(const std::string& q) const;

  /// Same semiring, alphabet, nonterminals, nonzero finals and weighted
  /// production set.
  friend bool operator==(const Wtgc& a, const Wtgc& b);

 private:
  Semiring semiring_;
  RankedAlphabet alphabet_;
  std::set<std::string> nonterminals_;
  std::map<std::string, Weight> finals_;
  std::vector<Production> productions_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Human-readable diagnostics; empty iff the grammar is well-formed.
std::vector<std::string> validate(const Wtgc& g);

/// Drops zero-weight productions.
Wtgc strip_zero(const Wtgc& g);

struct GrammarFlags {
  bool normalized = false;
  bool positive = false;
  bool classic = false;
  bool unconstrained = false;
  bool boolean_final = false;
  bool constraint_determined = false;

  friend bool operator==(const GrammarFlags&, const GrammarFlags&) = default;
};

GrammarFlags classify(const Wtgc& g);

bool is_normalized(const Production& p);
/// Every constrained position is a nonterminal leaf of the lhs.
bool is_classic(const Production& p);

using IndexConstraint = std::set<std::pair<std::size_t, std::size_t>>;

/// c(E) on 1-based state indices.  Throws PreconditionError for a
/// non-classic production.
IndexConstraint index_constraints(const Production& p);

struct EqRestriction {
  std::string sink;
  /// Per production identifier, the governing index g_p(i) for i = 1..k
  /// (entry i-1).
  std::map<std::string, std::vector<std::size_t>> governing;
};

/// Sink nonterminal and governing indices when g is eq-restricted.
std::optional<EqRestriction> eq_restriction(const Wtgc& g);

/// Governing indices of one production for a given sink, or nothing if
/// the production violates the conditions.
std::optional<std::vector<std::size_t>> governing_indices(const Production& p, const std::string& sink);

/// The lhs height maximized over the productions (0 for no productions).
std::size_t production_height(const Wtgc& g);

}  // namespace wtgc

#endif  // WTGC_GRAMMAR_HPP
