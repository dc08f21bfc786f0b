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

#ifndef WTGC_HOMOMORPHISM_HPP
#define WTGC_HOMOMORPHISM_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wtgc/grammar.hpp"
#include "wtgc/semiring.hpp"
#include "wtgc/trees.hpp"

namespace wtgc {

/// A tree homomorphism given by one right-hand side h'_sigma in T_Delta(X_k)
/// per input symbol sigma of rank k.
class TreeHom {
 public:
  /// Throws PreconditionError when a right-hand side is missing, uses a
  /// variable beyond the rank, or a symbol outside `target`.
  TreeHom(RankedAlphabet source, RankedAlphabet target, std::map<std::string, Tree> rhs);

  const RankedAlphabet& source() const noexcept { return source_; }
  const RankedAlphabet& target() const noexcept { return target_; }
  const std::map<std::string, Tree>& rules() const noexcept { return rhs_; }
  const Tree& rhs(const std::string& symbol) const;

  /// Every h'_sigma contains all of x1..xk.
  bool nondeleting() const noexcept { return nondeleting_; }
  /// No h'_sigma is a bare variable.
  bool nonerasing() const noexcept { return nonerasing_; }

 private:
  RankedAlphabet source_;
  RankedAlphabet target_;
  std::map<std::string, Tree> rhs_;
  bool nondeleting_ = true;
  bool nonerasing_ = true;
};

/// `hom` header, optional `source a:0 ...` and `target a:0 ...` lines, then
/// rules `phi -> sigma(gamma(x1), x1)`.  Missing alphabets are inferred.
TreeHom parse_hom(std::string_view text);
std::string serialize_hom(const TreeHom& h);

Tree apply(const TreeHom& h, const Tree& t);

/// h^{-1}(u) in canonical order.  Requires h nondeleting and nonerasing.
std::vector<Tree> preimage(const TreeHom& h, const Tree& u);

/// sum over t in h^{-1}(u) of g(t).
Weight image_weight_oracle(const TreeHom& h, const Wtgc& g, const Tree& u);

/// Name of the annotated symbol <delta, p> where p is the production with
/// the given index in sorted order: `delta#p<index>`.
std::string annotated_symbol(const std::string& delta, std::size_t index);

/// First stage of the image construction over Delta and the annotated
/// symbols, with a fresh sink nonterminal.  Requires g to be a WTA and h
/// nondeleting and nonerasing.
Wtgc image_grammar_stage_one(const Wtgc& g, const TreeHom& h);

/// Eq-restricted positive classic grammar for h(g) over Delta.
Wtgc image_grammar(const Wtgc& g, const TreeHom& h);

}  // namespace wtgc

#endif  // WTGC_HOMOMORPHISM_HPP
