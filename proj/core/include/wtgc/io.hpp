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

#ifndef WTGC_IO_HPP
#define WTGC_IO_HPP

#include <cstddef>
#include <set>
#include <string>
#include <string_view>

#include "wtgc/grammar.hpp"
#include "wtgc/trees.hpp"

namespace wtgc {

/// How leaves and symbols of a term are resolved.
struct TermOptions {
  /// Symbols are checked against this alphabet when set.
  const RankedAlphabet* alphabet = nullptr;
  /// Leaf names in this set become nonterminal leaves.
  const std::set<std::string>* nonterminals = nullptr;
  /// `x1`, `x2`, ... become variables.
  bool variables = false;
  /// When set, every symbol's rank is recorded here; inconsistent ranks
  /// are an error.
  RankedAlphabet* collect = nullptr;
};

/// Parses a term such as `sigma(gamma(alpha), alpha)`.  `line` and
/// `column` locate the first character for error messages.  Throws
/// ParseError.
Tree parse_term(std::string_view text, const TermOptions& options, std::size_t line = 1, std::size_t column = 1);

/// A ground tree, checked against the alphabet when one is given.
Tree parse_tree(std::string_view text, const RankedAlphabet* alphabet = nullptr);

/// Grammar file syntax:
///
///   semiring arctic
///   alphabet alpha:0 gamma:1 sigma:2
///   nonterminals q qf
///   final qf = 0
///   prod sigma(gamma(q), q) -> qf [eq 1.1=2] @ 1
///
/// `#` starts a comment at the beginning of a line or after whitespace.
Wtgc parse_grammar(std::string_view text);

/// Canonical form: alphabet and nonterminals sorted, one final per line
/// (zeros omitted), productions sorted by identifier.
std::string serialize_grammar(const Wtgc& g);

/// Whole file contents.  Throws Error when the file cannot be read.
std::string read_file(const std::string& path);

/// Strips a trailing comment (see parse_grammar).
std::string_view strip_comment(std::string_view line);

}  // namespace wtgc

#endif  // WTGC_IO_HPP
