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

#ifndef WTGC_TREES_HPP
#define WTGC_TREES_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wtgc {

/// Finite map from symbol name to rank.
using RankedAlphabet = std::map<std::string, std::size_t>;

std::string format_alphabet(const RankedAlphabet& alphabet);

enum class LabelKind : std::uint8_t { symbol, nonterminal, variable };

struct Label {
  LabelKind kind = LabelKind::symbol;
  std::string name;
  /// 1-based variable index for LabelKind::variable, 0 otherwise.
  std::size_t index = 0;

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;
};

/// Immutable ranked tree over symbols, nonterminal leaves and variable
/// leaves.  Copies share structure; equality is structural with a cached
/// hash and a pointer fast path.
class Tree {
 public:
  static Tree symbol(std::string name, std::vector<Tree> children = {});
  static Tree nonterminal(std::string name);
  static Tree variable(std::size_t index);

  const Label& label() const noexcept;
  std::span<const Tree> children() const noexcept;
  const Tree& child(std::size_t i) const { return children()[i]; }
  std::size_t arity() const noexcept { return children().size(); }

  bool is_symbol() const noexcept { return label().kind == LabelKind::symbol; }
  bool is_nonterminal() const noexcept { return label().kind == LabelKind::nonterminal; }
  bool is_variable() const noexcept { return label().kind == LabelKind::variable; }

  /// Number of positions.
  std::size_t size() const noexcept;
  /// Maximal position length; a single node has height 0.
  std::size_t height() const noexcept;
  std::size_t hash() const noexcept;

  /// Term syntax, e.g. `sigma(gamma(alpha),alpha)`.
  std::string to_string() const;

  /// Same underlying node (implies equality).
  bool shares_node(const Tree& other) const noexcept { return node_ == other.node_; }

  friend bool operator==(const Tree& a, const Tree& b);
  /// Structural order: label first, then children lexicographically.
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);

 private:
  struct Node;
  explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const Tree& t);

struct TreeHash {
  std::size_t operator()(const Tree& t) const noexcept { return t.hash(); }
};

/// Orders trees by size, then by serialized form.
struct CanonicalTreeLess {
  bool operator()(const Tree& a, const Tree& b) const;
};

/// Sequence of 1-based child indices; the empty path is the root.
class Position {
 public:
  Position() = default;
  Position(std::initializer_list<std::size_t> path) : path_(path) {}
  explicit Position(std::vector<std::size_t> path) : path_(std::move(path)) {}

  /// Parses `e` (root) or dot-separated positive integers such as `1.2.1`.
  static Position parse(std::string_view text);

  const std::vector<std::size_t>& path() const noexcept { return path_; }
  std::size_t length() const noexcept { return path_.size(); }
  bool is_root() const noexcept { return path_.empty(); }
  std::size_t operator[](std::size_t i) const { return path_[i]; }

  /// This position extended by one child index.
  Position child(std::size_t index) const;
  /// Concatenation `*this` followed by `suffix`.
  Position concat(const Position& suffix) const;
  /// Drops the first `n` steps.
  Position drop_prefix(std::size_t n) const;
  Position prefix(std::size_t n) const;
  bool is_prefix_of(const Position& other) const noexcept;

  /// `e` or dot-separated indices.
  std::string to_string() const;

  friend bool operator==(const Position&, const Position&) = default;
  /// Lexicographic with prefixes first (plain container order).
  friend auto operator<=>(const Position&, const Position&) = default;

 private:
  std::vector<std::size_t> path_;
};

std::ostream& operator<<(std::ostream& os, const Position& p);

/// The left-most derivation order: lexicographic, but a proper prefix is
/// larger than its extensions, so the root is the largest position.
bool leftmost_before(const Position& a, const Position& b) noexcept;

using Constraint = std::pair<Position, Position>;
using ConstraintSet = std::set<Constraint>;

/// `1.1=2, 1=3` with pairs in set order.
std::string format_constraints(const ConstraintSet& constraints);

/// All positions in preorder.
std::vector<Position> positions(const Tree& t);
bool has_position(const Tree& t, const Position& w) noexcept;
/// t|_w.  Throws InvalidPosition.
const Tree& subtree(const Tree& t, const Position& w);
/// t[u]_w.  Throws InvalidPosition.
Tree replace(const Tree& t, const Tree& u, const Position& w);
/// Simultaneous substitution of variables by index; unbound variables stay.
Tree substitute(const Tree& t, const std::map<std::size_t, Tree>& theta);
/// Simultaneous substitution of nonterminal leaves by name.
Tree substitute_nonterminals(const Tree& t, const std::map<std::string, Tree>& theta);
/// Left-to-right sequence of the nonterminal and variable leaves.
std::vector<Label> yield_of(const Tree& t);
/// Positions labeled by one of the given leaf kinds, in preorder.
std::vector<Position> positions_of_kind(const Tree& t, LabelKind kind);

struct HeightAndSize {
  std::size_t height = 0;
  std::size_t size = 0;
};
HeightAndSize height_and_size(const Tree& t);

/// Both positions exist and the subtrees there coincide.
bool satisfies(const Tree& t, const Constraint& c);
bool satisfies_all(const Tree& t, const ConstraintSet& constraints);
/// Every pair is dissatisfied (stronger than "not satisfies_all").
bool dissatisfies_all(const Tree& t, const ConstraintSet& constraints);

/// Checks the tree against the alphabet: symbol arities, no variables or
/// nonterminals unless allowed.  Returns a diagnostic or an empty string.
std::string check_tree(const Tree& t, const RankedAlphabet& alphabet, bool allow_leaves = false);

/// Every ground tree over the alphabet with at most `max_size` nodes,
/// ordered by size and then by serialized form.
std::vector<Tree> enumerate_trees(const RankedAlphabet& alphabet, std::size_t max_size);

/// Number of occurrences of a symbol.
std::size_t count_symbol(const Tree& t, std::string_view symbol);

}  // namespace wtgc

#endif  // WTGC_TREES_HPP
