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

#ifndef WTGC_DECISION_HPP
#define WTGC_DECISION_HPP

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "wtgc/grammar.hpp"
#include "wtgc/trees.hpp"

namespace wtgc {

struct ProductivityTable {
  std::set<std::string> productive;
  /// Productive nonterminals reachable from supp(F) through productions
  /// whose children are all productive.
  std::set<std::string> reachable;
};

ProductivityTable productivity(const Wtgc& g, const std::string& sink);

/// boolean_finals, eliminate_zero_derivations and ensure_nonbot_child.
/// Requires an eq-restricted positive classic grammar over a zero-sum-free
/// semiring.  An unconstrained grammar without a sink gets a fresh one.
Wtgc decision_grammar(const Wtgc& g);

struct Verdict {
  bool value = false;
  /// Productivity table, or the detected cycle.
  std::string explanation;
};

Verdict decide_empty(const Wtgc& g);
Verdict decide_finite(const Wtgc& g);

bool is_support_empty(const Wtgc& g);
bool is_support_finite(const Wtgc& g);

/// All trees t with g(t) != 0 and |t| <= max_size, in canonical order.
std::vector<Tree> enumerate_support(const Wtgc& g, std::size_t max_size);

}  // namespace wtgc

#endif  // WTGC_DECISION_HPP
