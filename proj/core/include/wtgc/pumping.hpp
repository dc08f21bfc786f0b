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

#ifndef WTGC_PUMPING_HPP
#define WTGC_PUMPING_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wtgc/grammar.hpp"
#include "wtgc/semantics.hpp"
#include "wtgc/trees.hpp"

namespace wtgc {

struct SubstitutionSite {
  /// d in D^q(t); the tree is d.input.
  Derivation base;
  /// d' in D^{q'}(t').
  Derivation donor;
  Position at;
};

struct DerivedTree {
  Tree tree;
  Derivation derivation;
};

/// t[[t']]_w and d[[d']]_w.  g must be eq-restricted, positive and classic;
/// the derivation incorporated in the base at w must target the donor's
/// nonterminal, and neither may be the sink.
DerivedTree substitute_derivation(const Wtgc& g, const SubstitutionSite& site);

/// The unique derivation of u to the sink.
Derivation sink_derivation(const Wtgc& g, const std::string& sink, const Tree& u);

/// Replaces one sink child by a fresh nonterminal `top` in every non-sink
/// production whose children are all the sink.  `top` generates every tree
/// with weight 1.
Wtgc ensure_nonbot_child(const Wtgc& g);

/// (|Q| + 1) * height(P).
std::size_t grammar_height(const Wtgc& g);

/// `count` trees of strictly increasing height with derivations to
/// d.target, obtained by repeated derivation substitution.
std::vector<DerivedTree> pump(const Wtgc& g, const Derivation& d, std::size_t count);

/// Builds a tree with a nonzero-weight derivation to q and height above
/// `min_height`, combining productions bottom-up for at most `rounds`
/// rounds.  g must be eq-restricted and positive.
std::optional<Tree> grow_witness(const Wtgc& g, const std::string& q, std::size_t min_height, std::size_t rounds = 64);

/// (t_n, t'_n) over {a, g, f, f_}: complete binary trees of height n whose
/// inner levels are f, with the left spine of t'_n relabeled f_.
std::pair<Tree, Tree> separation_family(std::size_t n);

}  // namespace wtgc

#endif  // WTGC_PUMPING_HPP
