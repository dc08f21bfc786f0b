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

#ifndef WTGC_SEMANTICS_HPP
#define WTGC_SEMANTICS_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wtgc/grammar.hpp"
#include "wtgc/semiring.hpp"
#include "wtgc/trees.hpp"

namespace wtgc {

struct DerivationStep {
  std::string production;
  Position position;

  friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};

/// A derivation for a fixed input tree; steps name productions by id.
struct Derivation {
  Tree input;
  std::string target;
  std::vector<DerivationStep> steps;

  /// `(prod-id @ pos) ...` in step order.
  std::string to_string() const;

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

/// Matches a linear context c with variables x1..xk in order against t.
/// On success fills `subtrees` with t_1..t_k such that t = c[t_1..t_k].
bool match_context(const Tree& context, const Tree& t, std::vector<Tree>& subtrees);

/// t |= E and t dissatisfies every pair of I.
bool constraints_hold(const Production& p, const Tree& t);

/// Memoized initial-algebra semantics of one grammar, which it copies.
/// Not thread-safe; use one instance per thread.
class Evaluator {
 public:
  explicit Evaluator(const Wtgc& g);

  const Wtgc& grammar() const noexcept { return g_; }
  /// wt^q(t).
  Weight state_weight(const std::string& q, const Tree& t);
  /// wt^q(t) for all nonterminals, in the order of grammar().nonterminals().
  const std::vector<Weight>& state_weights(const Tree& t);
  /// sum_q F_q * wt^q(t).
  Weight evaluate(const Tree& t);
  std::size_t index_of(const std::string& q) const;

 private:
  struct Rule {
    const Production* production;
    Tree context;
    std::vector<std::size_t> states;
  };

  Wtgc g_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::unordered_map<std::string, std::vector<Rule>> by_symbol_;
  std::unordered_map<Tree, std::vector<Weight>, TreeHash> memo_;
};

Weight state_weight(const Wtgc& g, const std::string& q, const Tree& t);
Weight evaluate(const Wtgc& g, const Tree& t);

/// All complete left-most derivations for t to q.
std::vector<Derivation> derivations(const Wtgc& g, const Tree& t, const std::string& q);

/// Number of complete left-most derivations for t to q, saturating at the
/// maximum of the type.
std::uint64_t count_derivations(const Wtgc& g, const Tree& t, const std::string& q);

/// Product of the step weights.  Throws PreconditionError for a step that
/// names a production not in g.
Weight derivation_weight(const Wtgc& g, const Derivation& d);

/// Replays d step by step on sentential forms, checking constraints on
/// the input subtrees and the left-most order.  Returns a diagnostic, or
/// an empty string when d is a complete left-most derivation to d.target.
std::string replay(const Wtgc& g, const Derivation& d);

/// The derivation for input|_w incorporated in d.  Throws InvalidPosition.
Derivation incorporated(const Derivation& d, const Position& w);

/// The first tree (in enumeration order) of size at most max_size with
/// more than one complete left-most derivation to a nonterminal with
/// nonzero final weight.
std::optional<Tree> check_unambiguous_upto(const Wtgc& g, std::size_t max_size);

}  // namespace wtgc

#endif  // WTGC_SEMANTICS_HPP
