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

#include "wtgc/trees.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "wtgc/error.hpp"

namespace wtgc {

struct Tree::Node {
  Label label;
  std::vector<Tree> children;
  std::size_t size = 1;
  std::size_t height = 0;
  std::size_t hash = 0;
};

namespace {

std::size_t combine(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Tree Tree::symbol(std::string name, std::vector<Tree> children) {
  auto node = std::make_shared<Node>();
  node->label = Label{LabelKind::symbol, std::move(name), 0};
  node->children = std::move(children);
  std::size_t h = combine(std::hash<std::string>{}(node->label.name), 0x51);
  for (const auto& c : node->children) {
    node->size += c.size();
    node->height = std::max(node->height, c.height() + 1);
    h = combine(h, c.hash());
  }
  node->hash = h;
  return Tree(std::move(node));
}

Tree Tree::nonterminal(std::string name) {
  auto node = std::make_shared<Node>();
  node->label = Label{LabelKind::nonterminal, std::move(name), 0};
  node->hash = combine(std::hash<std::string>{}(node->label.name), 0x17);
  return Tree(std::move(node));
}

Tree Tree::variable(std::size_t index) {
  if (index == 0) throw Error("variables are indexed from 1");
  auto node = std::make_shared<Node>();
  node->label = Label{LabelKind::variable, "x" + std::to_string(index), index};
  node->hash = combine(index, 0x2b);
  return Tree(std::move(node));
}

const Label& Tree::label() const noexcept { return node_->label; }

std::span<const Tree> Tree::children() const noexcept { return node_->children; }

std::size_t Tree::size() const noexcept { return node_->size; }

std::size_t Tree::height() const noexcept { return node_->height; }

std::size_t Tree::hash() const noexcept { return node_->hash; }

namespace {

void write_term(std::ostream& os, const Tree& t) {
  os << t.label().name;
  if (t.arity() == 0) return;
  os << '(';
  bool first = true;
  for (const auto& c : t.children()) {
    if (!first) os << ',';
    first = false;
    write_term(os, c);
  }
  os << ')';
}

}  // namespace

std::string Tree::to_string() const {
  std::ostringstream os;
  write_term(os, *this);
  return os.str();
}

bool operator==(const Tree& a, const Tree& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size) return false;
  if (!(a.node_->label == b.node_->label)) return false;
  return a.node_->children == b.node_->children;
}

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.node_->label <=> b.node_->label; c != 0) return c;
  const auto& x = a.node_->children;
  const auto& y = b.node_->children;
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

std::ostream& operator<<(std::ostream& os, const Tree& t) {
  write_term(os, t);
  return os;
}

bool CanonicalTreeLess::operator()(const Tree& a, const Tree& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.to_string() < b.to_string();
}

std::string format_alphabet(const RankedAlphabet& alphabet) {
  std::string out;
  for (const auto& [name, rank] : alphabet) {
    if (!out.empty()) out += ' ';
    out += name + ":" + std::to_string(rank);
  }
  return out;
}

// --- positions --------------------------------------------------------------

Position Position::parse(std::string_view text) {
  if (text == "e" || text == "ε") return Position{};
  std::vector<std::size_t> path;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto dot = text.find('.', start);
    const auto part = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw Error("malformed position '" + std::string(text) + "'");
    }
    const auto index = std::stoull(std::string(part));
    if (index == 0) throw Error("positions are 1-based: '" + std::string(text) + "'");
    path.push_back(index);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return Position(std::move(path));
}

Position Position::child(std::size_t index) const {
  auto path = path_;
  path.push_back(index);
  return Position(std::move(path));
}

Position Position::concat(const Position& suffix) const {
  auto path = path_;
  path.insert(path.end(), suffix.path_.begin(), suffix.path_.end());
  return Position(std::move(path));
}

Position Position::drop_prefix(std::size_t n) const {
  n = std::min(n, path_.size());
  return Position(std::vector<std::size_t>(path_.begin() + static_cast<std::ptrdiff_t>(n), path_.end()));
}

Position Position::prefix(std::size_t n) const {
  n = std::min(n, path_.size());
  return Position(std::vector<std::size_t>(path_.begin(), path_.begin() + static_cast<std::ptrdiff_t>(n)));
}

bool Position::is_prefix_of(const Position& other) const noexcept {
  return path_.size() <= other.path_.size() && std::equal(path_.begin(), path_.end(), other.path_.begin());
}

std::string Position::to_string() const {
  if (path_.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < path_.size(); ++i) {
    if (i > 0) out += '.';
    out += std::to_string(path_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Position& p) { return os << p.to_string(); }

bool leftmost_before(const Position& a, const Position& b) noexcept {
  const auto& x = a.path();
  const auto& y = b.path();
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  // One is a prefix of the other; the longer one comes first.
  return x.size() > y.size();
}

std::string format_constraints(const ConstraintSet& constraints) {
  std::string out;
  for (const auto& [v, w] : constraints) {
    if (!out.empty()) out += ", ";
    out += v.to_string() + "=" + w.to_string();
  }
  return out;
}

// --- tree operations --------------------------------------------------------

namespace {

void collect_positions(const Tree& t, Position& at, std::vector<Position>& out) {
  out.push_back(at);
  for (std::size_t i = 0; i < t.arity(); ++i) {
    at = at.child(i + 1);
    collect_positions(t.child(i), at, out);
    at = at.prefix(at.length() - 1);
  }
}

const Tree* find_subtree(const Tree& t, const Position& w) noexcept {
  const Tree* node = &t;
  for (std::size_t step : w.path()) {
    if (step == 0 || step > node->arity()) return nullptr;
    node = &node->child(step - 1);
  }
  return node;
}

Tree replace_at(const Tree& t, const Tree& u, const Position& w, std::size_t depth) {
  if (depth == w.length()) return u;
  std::vector<Tree> children(t.children().begin(), t.children().end());
  const std::size_t i = w[depth] - 1;
  children[i] = replace_at(children[i], u, w, depth + 1);
  return Tree::symbol(t.label().name, std::move(children));
}

}  // namespace

std::vector<Position> positions(const Tree& t) {
  std::vector<Position> out;
  out.reserve(t.size());
  Position at;
  collect_positions(t, at, out);
  return out;
}

bool has_position(const Tree& t, const Position& w) noexcept { return find_subtree(t, w) != nullptr; }

const Tree& subtree(const Tree& t, const Position& w) {
  const Tree* node = find_subtree(t, w);
  if (node == nullptr) throw InvalidPosition("position " + w.to_string() + " not in " + t.to_string());
  return *node;
}

Tree replace(const Tree& t, const Tree& u, const Position& w) {
  if (!has_position(t, w)) throw InvalidPosition("position " + w.to_string() + " not in " + t.to_string());
  return replace_at(t, u, w, 0);
}

Tree substitute(const Tree& t, const std::map<std::size_t, Tree>& theta) {
  if (t.is_variable()) {
    auto it = theta.find(t.label().index);
    return it == theta.end() ? t : it->second;
  }
  if (t.arity() == 0) return t;
  std::vector<Tree> children;
  children.reserve(t.arity());
  for (const auto& c : t.children()) children.push_back(substitute(c, theta));
  return Tree::symbol(t.label().name, std::move(children));
}

Tree substitute_nonterminals(const Tree& t, const std::map<std::string, Tree>& theta) {
  if (t.is_nonterminal()) {
    auto it = theta.find(t.label().name);
    return it == theta.end() ? t : it->second;
  }
  if (t.arity() == 0) return t;
  std::vector<Tree> children;
  children.reserve(t.arity());
  for (const auto& c : t.children()) children.push_back(substitute_nonterminals(c, theta));
  return Tree::symbol(t.label().name, std::move(children));
}

std::vector<Label> yield_of(const Tree& t) {
  std::vector<Label> out;
  std::function<void(const Tree&)> walk = [&](const Tree& n) {
    if (!n.is_symbol()) {
      out.push_back(n.label());
      return;
    }
    for (const auto& c : n.children()) walk(c);
  };
  walk(t);
  return out;
}

std::vector<Position> positions_of_kind(const Tree& t, LabelKind kind) {
  std::vector<Position> out;
  for (auto& w : positions(t)) {
    if (subtree(t, w).label().kind == kind) out.push_back(std::move(w));
  }
  return out;
}

HeightAndSize height_and_size(const Tree& t) { return {t.height(), t.size()}; }

bool satisfies(const Tree& t, const Constraint& c) {
  const Tree* a = find_subtree(t, c.first);
  if (a == nullptr) return false;
  const Tree* b = find_subtree(t, c.second);
  if (b == nullptr) return false;
  return *a == *b;
}

bool satisfies_all(const Tree& t, const ConstraintSet& constraints) {
  return std::all_of(constraints.begin(), constraints.end(), [&](const Constraint& c) { return satisfies(t, c); });
}

bool dissatisfies_all(const Tree& t, const ConstraintSet& constraints) {
  return std::none_of(constraints.begin(), constraints.end(), [&](const Constraint& c) { return satisfies(t, c); });
}

std::string check_tree(const Tree& t, const RankedAlphabet& alphabet, bool allow_leaves) {
  if (!t.is_symbol()) {
    if (allow_leaves) return {};
    return std::string(t.is_variable() ? "variable " : "nonterminal ") + t.label().name + " in a ground tree";
  }
  auto it = alphabet.find(t.label().name);
  if (it == alphabet.end()) return "unknown symbol " + t.label().name;
  if (it->second != t.arity()) {
    return "arity mismatch: " + t.label().name + " has rank " + std::to_string(it->second) + " but " +
           std::to_string(t.arity()) + " children";
  }
  for (const auto& c : t.children()) {
    if (auto msg = check_tree(c, alphabet, allow_leaves); !msg.empty()) return msg;
  }
  return {};
}

std::vector<Tree> enumerate_trees(const RankedAlphabet& alphabet, std::size_t max_size) {
  std::vector<std::vector<Tree>> by_size(max_size + 1);
  for (std::size_t n = 1; n <= max_size; ++n) {
    auto& bucket = by_size[n];
    for (const auto& [name, rank] : alphabet) {
      if (rank == 0) {
        if (n == 1) bucket.push_back(Tree::symbol(name));
        continue;
      }
      if (n < rank + 1) continue;
      // Distribute n - 1 nodes over `rank` children, each at least 1.
      std::vector<Tree> chosen;
      std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t slot, std::size_t remaining) {
        if (slot == rank) {
          if (remaining == 0) bucket.push_back(Tree::symbol(name, chosen));
          return;
        }
        const std::size_t slots_after = rank - slot - 1;
        for (std::size_t s = 1; s + slots_after <= remaining; ++s) {
          if (slot + 1 == rank && s != remaining) continue;
          for (const auto& c : by_size[s]) {
            chosen.push_back(c);
            fill(slot + 1, remaining - s);
            chosen.pop_back();
          }
        }
      };
      fill(0, n - 1);
    }
    std::vector<std::pair<std::string, Tree>> keyed;
    keyed.reserve(bucket.size());
    for (auto& t : bucket) keyed.emplace_back(t.to_string(), std::move(t));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    bucket.clear();
    for (auto& [_, t] : keyed) bucket.push_back(std::move(t));
  }
  std::vector<Tree> out;
  for (auto& bucket : by_size) out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

std::size_t count_symbol(const Tree& t, std::string_view symbol) {
  std::size_t n = (t.is_symbol() && t.label().name == symbol) ? 1 : 0;
  for (const auto& c : t.children()) n += count_symbol(c, symbol);
  return n;
}

}  // namespace wtgc
