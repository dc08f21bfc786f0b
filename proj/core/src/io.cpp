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

#include "wtgc/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "wtgc/error.hpp"

namespace wtgc {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_name_char(char c) {
  if (is_space(c)) return false;
  switch (c) {
    case '(':
    case ')':
    case ',':
    case '[':
    case ']':
    case '@': return false;
    default: return true;
  }
}

bool is_variable_name(std::string_view name) {
  if (name.size() < 2 || name[0] != 'x' || name[1] == '0') return false;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

class TermParser {
 public:
  TermParser(std::string_view text, const TermOptions& options, std::size_t line, std::size_t column)
      : text_(text), options_(options), line_(line), column_(column) {}

  Tree parse_all() {
    Tree t = parse();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "' after term");
    return t;
  }

  Tree parse() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_]) && text_.substr(pos_, 2) != "->") ++pos_;
    if (pos_ == start) fail(pos_ < text_.size() ? "expected a name, found '" + std::string(1, text_[pos_]) + "'" : "expected a name");
    std::string name(text_.substr(start, pos_ - start));
    skip_space();
    std::vector<Tree> children;
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      while (true) {
        children.push_back(parse());
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < text_.size() && text_[pos_] == ')') {
          ++pos_;
          break;
        }
        fail("expected ',' or ')'");
      }
    }
    return make(name, std::move(children), start);
  }

  std::size_t consumed() const noexcept { return pos_; }

 private:
  Tree make(const std::string& name, std::vector<Tree> children, std::size_t at) {
    const bool leaf = children.empty();
    if (leaf && options_.nonterminals != nullptr && options_.nonterminals->count(name) > 0) {
      if (options_.alphabet != nullptr && options_.alphabet->count(name) > 0) {
        fail_at("name " + name + " is both a symbol and a nonterminal", at);
      }
      return Tree::nonterminal(name);
    }
    if (leaf && options_.variables && is_variable_name(name)) {
      return Tree::variable(std::stoull(name.substr(1)));
    }
    if (options_.alphabet != nullptr) {
      auto it = options_.alphabet->find(name);
      if (it == options_.alphabet->end()) fail_at("unknown symbol " + name, at);
      if (it->second != children.size()) {
        fail_at("arity mismatch: " + name + " has rank " + std::to_string(it->second) + " but " +
                    std::to_string(children.size()) + " children",
                at);
      }
    }
    if (options_.collect != nullptr) {
      auto [it, inserted] = options_.collect->emplace(name, children.size());
      if (!inserted && it->second != children.size()) fail_at("arity mismatch: " + name + " used with different ranks", at);
    }
    return Tree::symbol(name, std::move(children));
  }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }

  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
    std::size_t line = line_;
    std::size_t column = column_;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  std::string_view text_;
  const TermOptions& options_;
  std::size_t line_;
  std::size_t column_;
  std::size_t pos_ = 0;
};

ConstraintSet parse_constraints(std::string_view body, std::size_t line, std::size_t column) {
  ConstraintSet out;
  std::size_t start = 0;
  while (start <= body.size()) {
    const auto comma = body.find(',', start);
    const auto item_raw = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const auto item = trim(item_raw);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected a constraint v=w", line, column + start);
    try {
      out.emplace(Position::parse(trim(item.substr(0, eq))), Position::parse(trim(item.substr(eq + 1))));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), line, column + start);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

}  // namespace

Tree parse_term(std::string_view text, const TermOptions& options, std::size_t line, std::size_t column) {
  return TermParser(text, options, line, column).parse_all();
}

Tree parse_tree(std::string_view text, const RankedAlphabet* alphabet) {
  TermOptions options;
  options.alphabet = alphabet;
  return parse_term(text, options);
}

std::string_view strip_comment(std::string_view line) {
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '#' && (i == 0 || is_space(line[i - 1]))) return line.substr(0, i);
  }
  return line;
}

Wtgc parse_grammar(std::string_view text) {
  std::optional<Wtgc> g;
  std::set<std::string> nonterminals;
  RankedAlphabet alphabet;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const auto raw = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    const std::size_t line_start = start;
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto line = strip_comment(raw);
    const auto words = split_words(line);
    if (words.empty()) continue;
    const auto keyword = words.front();
    auto column_of = [&](std::string_view part) {
      return static_cast<std::size_t>(part.data() - text.data()) - line_start + 1;
    };
    auto require_grammar = [&]() -> Wtgc& {
      if (!g) throw ParseError("'semiring' must come first", line_no, column_of(keyword));
      return *g;
    };

    if (keyword == "semiring") {
      if (g) throw ParseError("duplicate 'semiring' line", line_no, column_of(keyword));
      const auto rest = trim(line.substr(static_cast<std::size_t>(keyword.data() + keyword.size() - line.data())));
      try {
        g.emplace(Semiring::parse(rest));
      } catch (const SemiringError& e) {
        throw ParseError(e.what(), line_no, column_of(keyword));
      }
    } else if (keyword == "alphabet") {
      auto& grammar = require_grammar();
      for (std::size_t i = 1; i < words.size(); ++i) {
        const auto w = words[i];
        const auto colon = w.rfind(':');
        const auto rank = colon == std::string_view::npos ? std::string_view{} : w.substr(colon + 1);
        if (colon == 0 || rank.empty() ||
            !std::all_of(rank.begin(), rank.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
          throw ParseError("expected name:rank", line_no, column_of(w));
        }
        const std::string name(w.substr(0, colon));
        const auto r = static_cast<std::size_t>(std::stoull(std::string(rank)));
        auto [it, inserted] = alphabet.emplace(name, r);
        if (!inserted && it->second != r) throw ParseError("symbol " + name + " redeclared", line_no, column_of(w));
        grammar.add_symbol(name, r);
      }
    } else if (keyword == "nonterminals") {
      auto& grammar = require_grammar();
      for (std::size_t i = 1; i < words.size(); ++i) {
        const std::string name(words[i]);
        if (alphabet.count(name) > 0) {
          throw ParseError("name " + name + " is both a symbol and a nonterminal", line_no, column_of(words[i]));
        }
        nonterminals.insert(name);
        grammar.add_nonterminal(name);
      }
    } else if (keyword == "final") {
      auto& grammar = require_grammar();
      if (words.size() != 4 || words[2] != "=") throw ParseError("expected 'final <q> = <weight>'", line_no, column_of(keyword));
      const std::string q(words[1]);
      if (nonterminals.count(q) == 0) throw ParseError("undeclared nonterminal " + q, line_no, column_of(words[1]));
      try {
        grammar.set_final(q, grammar.semiring().parse_element(words[3]));
      } catch (const SemiringError& e) {
        throw ParseError(e.what(), line_no, column_of(words[3]));
      }
    } else if (keyword == "prod") {
      auto& grammar = require_grammar();
      const std::size_t body_offset = static_cast<std::size_t>(keyword.data() + keyword.size() - line.data());
      const auto body = line.substr(body_offset);
      const std::size_t body_column = body_offset + 1;

      TermOptions options;
      options.alphabet = &alphabet;
      options.nonterminals = &nonterminals;
      TermParser parser(body, options, line_no, body_column);
      Tree lhs = parser.parse();
      std::size_t i = parser.consumed();
      auto skip = [&]() {
        while (i < body.size() && is_space(body[i])) ++i;
      };
      skip();
      if (body.substr(i, 2) != "->") throw ParseError("expected '->'", line_no, body_column + i);
      i += 2;
      skip();
      const std::size_t target_start = i;
      while (i < body.size() && is_name_char(body[i])) ++i;
      const std::string target(body.substr(target_start, i - target_start));
      if (target.empty()) throw ParseError("expected a target nonterminal", line_no, body_column + target_start);
      if (nonterminals.count(target) == 0) {
        throw ParseError("undeclared nonterminal " + target, line_no, body_column + target_start);
      }
      ConstraintSet eq;
      ConstraintSet ne;
      skip();
      while (i < body.size() && body[i] == '[') {
        const auto close = body.find(']', i);
        if (close == std::string_view::npos) throw ParseError("unterminated '['", line_no, body_column + i);
        const auto inner = body.substr(i + 1, close - i - 1);
        const auto kw_words = split_words(inner);
        if (kw_words.empty() || (kw_words.front() != "eq" && kw_words.front() != "ne")) {
          throw ParseError("expected 'eq' or 'ne'", line_no, body_column + i + 1);
        }
        const auto kw = kw_words.front();
        const std::size_t list_offset = static_cast<std::size_t>(kw.data() + kw.size() - body.data());
        auto parsed = parse_constraints(body.substr(list_offset, close - list_offset), line_no, body_column + list_offset);
        (kw == "eq" ? eq : ne).insert(parsed.begin(), parsed.end());
        i = close + 1;
        skip();
      }
      if (i >= body.size() || body[i] != '@') throw ParseError("expected '@ <weight>'", line_no, body_column + i);
      ++i;
      const auto literal = trim(body.substr(i));
      if (lhs.is_nonterminal()) throw ParseError("lhs is a bare nonterminal", line_no, body_column);
      Weight weight = grammar.semiring().zero();
      try {
        weight = grammar.semiring().parse_element(literal);
      } catch (const SemiringError& e) {
        throw ParseError(e.what(), line_no, body_column + i);
      }
      if (weight.is_zero()) throw ParseError("zero-weight production", line_no, body_column + i);
      Production p{std::move(lhs), target, std::move(eq), std::move(ne), weight};
      if (grammar.find(p.id()) != nullptr) throw ParseError("duplicate production '" + p.id() + "'", line_no, body_column);
      grammar.add_production(std::move(p));
    } else {
      throw ParseError("unknown directive '" + std::string(keyword) + "'", line_no, column_of(keyword));
    }
  }
  if (!g) throw ParseError("missing 'semiring' line", line_no == 0 ? 1 : line_no, 1);
  return std::move(*g);
}

std::string serialize_grammar(const Wtgc& g) {
  std::ostringstream out;
  out << "semiring " << g.semiring().name() << '\n';
  out << "alphabet";
  for (const auto& [name, rank] : g.alphabet()) out << ' ' << name << ':' << rank;
  out << '\n';
  out << "nonterminals";
  for (const auto& q : g.nonterminals()) out << ' ' << q;
  out << '\n';
  for (const auto& [q, w] : g.finals()) out << "final " << q << " = " << w << '\n';
  for (const auto& p : g.sorted_productions()) out << "prod " << p.id() << " @ " << p.weight << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace wtgc
