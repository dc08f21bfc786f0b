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

#ifndef WTGC_TRANSFORMS_HPP
#define WTGC_TRANSFORMS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wtgc/grammar.hpp"
#include "wtgc/semiring.hpp"

namespace wtgc {

/// Capped exponent vector with entrywise addition min(v_i + v'_i, cap).
class DicksonVector {
 public:
  DicksonVector(std::size_t dimension, std::uint64_t cap) : entries_(dimension, 0), cap_(cap) {}

  std::size_t dimension() const noexcept { return entries_.size(); }
  std::uint64_t cap() const noexcept { return cap_; }
  std::uint64_t operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<std::uint64_t>& entries() const noexcept { return entries_; }

  /// This vector plus the unit vector of coordinate i.
  DicksonVector plus_unit(std::size_t i) const;
  DicksonVector operator+(const DicksonVector& other) const;

  /// `1.0.2`
  std::string to_string() const;

  friend bool operator==(const DicksonVector&, const DicksonVector&) = default;
  friend auto operator<=>(const DicksonVector&, const DicksonVector&) = default;

 private:
  std::vector<std::uint64_t> entries_;
  std::uint64_t cap_;
};

/// Equivalent grammar in which every production has the form
/// sigma(q1, ..., qk) --E,I--> q.  Fresh nonterminals are named after the
/// subtree they abbreviate, e.g. `gamma{q}`.
Wtgc normalize(const Wtgc& g);

/// Equivalent grammar with final weights in {0, 1}: accepting copies of the
/// nonterminals with nonzero final weight pre-apply that weight.
Wtgc boolean_finals(const Wtgc& g);

/// The weights of wt(P) without 1, in sorted serialized order.
std::vector<Weight> dickson_weights(const Wtgc& g);

/// The cap u used by eliminate_zero_derivations.
std::uint64_t dickson_cap(const Wtgc& g);

/// Equivalent grammar in which every complete derivation has nonzero
/// weight.  Nonterminals are pairs <q, v> named `q{v}`; when the cap is 0
/// the vector is trivial and the original names are kept.
Wtgc eliminate_zero_derivations(const Wtgc& g);

/// Boolean grammar generating supp(g).  Requires a zero-sum-free semiring.
Wtgc support_grammar(const Wtgc& g);

/// Equivalent constraint-determined WTAc.  Requires a normalized grammar.
Wtgc constraint_determine(const Wtgc& g);

/// Pointwise sum.  Nonterminals of the second grammar that clash are
/// renamed with a `'` suffix.
Wtgc disjoint_union(const Wtgc& g1, const Wtgc& g2);

/// Pointwise product; nonterminals are pairs `q~z` reachable bottom-up.
Wtgc hadamard(const Wtgc& g1, const Wtgc& g2);

struct DisambiguateOptions {
  /// Replace h(wt_p) by 1 (support automata of zero-free grammars).
  bool unit_weights = false;
  /// Drop constraint splits that no tree up to `probe_size` realizes.
  bool prune_unsat = false;
  std::size_t probe_size = 7;
  std::size_t max_states = 1000000;
};

/// Unambiguous WTAc over the finite target of h whose run on t ends in the
/// vector (h(wt^q(t)))_q.  Requires a WTAc.
Wtgc disambiguate(const Wtgc& g, const SemiringHom& h, const DisambiguateOptions& options = {});

/// Name of a disambiguation state: `{q|z}` over the Boolean semiring,
/// `{q=2|z=1}` otherwise (zero entries omitted).
std::string vector_state_name(const std::vector<std::string>& names, const std::vector<Weight>& values);

/// Unambiguous Boolean WTAc generating supp(g).
Wtgc support_automaton(const Wtgc& g, const DisambiguateOptions& options = {});

/// Unambiguous Boolean WTAc generating the complement of supp(g).
Wtgc complement_support(const Wtgc& g, const DisambiguateOptions& options = {});

/// Maps a Boolean grammar into another semiring by 0 -> 0, 1 -> 1.
Wtgc lift_boolean(const Wtgc& g, const Semiring& target);

/// g restricted to supp(g2).
Wtgc restrict_support(const Wtgc& g, const Wtgc& g2);

/// Rank-preserving relabeling of an eq-restricted positive classic
/// grammar.  Symbols missing from `pi` map to themselves.  `target`, when
/// nonempty, is the output alphabet; otherwise the image of the input
/// alphabet.  Weights of colliding productions are added.
Wtgc relabel(const Wtgc& g, const std::map<std::string, std::string>& pi, const RankedAlphabet& target = {});

}  // namespace wtgc

#endif  // WTGC_TRANSFORMS_HPP
