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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "wtgc/decision.hpp"
#include "wtgc/error.hpp"
#include "wtgc/grammar.hpp"
#include "wtgc/homomorphism.hpp"
#include "wtgc/io.hpp"
#include "wtgc/pumping.hpp"
#include "wtgc/semantics.hpp"
#include "wtgc/semiring.hpp"
#include "wtgc/transforms.hpp"
#include "wtgc/trees.hpp"

namespace wtgc::cli {

namespace {

struct Options {
  std::string grammar;
  std::string other;
  std::string hom;
  std::string tree;
  std::string out;
  std::string format = "text";
  std::string nonterminal;
  std::string transform;
  std::string question;
  std::string semiring_hom = "support";
  std::string fixtures = "fixtures";
  std::optional<std::size_t> oracle_size;
  std::size_t count = 3;
  std::size_t n = 4;
  bool stage_one = false;
  bool explain = false;
  bool prune = false;
};

/// A failed oracle comparison.
class OracleFailure : public Error {
 public:
  using Error::Error;
};

Wtgc load_grammar(const std::string& path) { return parse_grammar(read_file(path)); }

TreeHom load_hom(const std::string& path) { return parse_hom(read_file(path)); }

Tree load_tree(const std::string& text, const RankedAlphabet& alphabet) {
  const Tree t = parse_tree(text, &alphabet);
  return t;
}

void emit_grammar(const Options& o, const Wtgc& g, std::ostream& out) {
  const std::string text = serialize_grammar(g);
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw Error("cannot write " + o.out);
  file << text;
}

void emit_weight(const Options& o, const Weight& w, std::ostream& out) {
  if (o.format == "json") {
    out << nlohmann::json{{"weight", w.to_string()}}.dump() << '\n';
  } else {
    out << w << '\n';
  }
}

std::vector<Tree> oracle_trees(const Options& o, const RankedAlphabet& alphabet) {
  if (!o.oracle_size) return {};
  return enumerate_trees(alphabet, *o.oracle_size);
}

/// Compares two weight functions on every tree up to the oracle size.
void compare_on_trees(const Options& o, const RankedAlphabet& alphabet, const std::string& what,
                      const std::function<Weight(const Tree&)>& expected, const std::function<Weight(const Tree&)>& actual) {
  for (const auto& t : oracle_trees(o, alphabet)) {
    const Weight e = expected(t);
    const Weight a = actual(t);
    if (!(e == a)) {
      throw OracleFailure(what + ": " + t.to_string() + " expected " + e.to_string() + " but got " + a.to_string());
    }
  }
}

Weight derivation_sum(const Wtgc& g, const Tree& t) {
  Weight total = g.semiring().zero();
  for (const auto& [q, f] : g.finals()) {
    for (const auto& d : derivations(g, t, q)) total += f * derivation_weight(g, d);
  }
  return total;
}

Weight boolean_of(const Weight& w) { return w.is_zero() ? Semiring::boolean().zero() : Semiring::boolean().one(); }

SemiringHom pick_semiring_hom(const std::string& name, const Semiring& source) {
  if (name == "support") return support_hom(source);
  if (name == "identity") return identity_hom(source);
  if (name.rfind("mod:", 0) == 0) return modular_hom(std::stoull(name.substr(4)));
  throw PreconditionError("unknown semiring homomorphism " + name);
}

Wtgc apply_transform(const std::string& name, const Wtgc& g) {
  if (name == "normalize") return normalize(g);
  if (name == "boolean-finals") return boolean_finals(g);
  if (name == "eliminate-zero") return eliminate_zero_derivations(g);
  if (name == "support-grammar") return support_grammar(g);
  if (name == "constraint-determine") return constraint_determine(g);
  if (name == "ensure-nonbot-child") return ensure_nonbot_child(g);
  if (name == "strip-zero") return strip_zero(g);
  throw PreconditionError("unknown transform " + name);
}

// --- commands ---------------------------------------------------------------

int cmd_eval(const Options& o, std::ostream& out) {
  const Wtgc g = load_grammar(o.grammar);
  const Tree t = load_tree(o.tree, g.alphabet());
  Evaluator ev(g);
  const Weight w = ev.evaluate(t);
  if (o.oracle_size) {
    compare_on_trees(o, g.alphabet(), "derivation sum", [&](const Tree& s) { return derivation_sum(g, s); },
                     [&](const Tree& s) { return ev.evaluate(s); });
    if (!(derivation_sum(g, t) == w)) throw OracleFailure("derivation sum differs on the given tree");
  }
  emit_weight(o, w, out);
  return kOk;
}

int cmd_derivs(const Options& o, std::ostream& out) {
  const Wtgc g = load_grammar(o.grammar);
  const Tree t = load_tree(o.tree, g.alphabet());
  for (const auto& q : g.nonterminals()) {
    if (!o.nonterminal.empty() && q != o.nonterminal) continue;
    for (const auto& d : derivations(g, t, q)) {
      out << q << ' ' << derivation_weight(g, d) << ' ' << d.to_string() << '\n';
    }
  }
  return kOk;
}

int cmd_transform(const Options& o, std::ostream& out) {
  const Wtgc g = load_grammar(o.grammar);
  const Wtgc h = apply_transform(o.transform, g);
  if (o.oracle_size) {
    Evaluator eg(g);
    Evaluator eh(h);
    if (o.transform == "support-grammar") {
      compare_on_trees(o, g.alphabet(), o.transform, [&](const Tree& t) { return boolean_of(eg.evaluate(t)); },
                       [&](const Tree& t) { return eh.evaluate(t); });
    } else {
      compare_on_trees(o, g.alphabet(), o.transform, [&](const Tree& t) { return eg.evaluate(t); },
                       [&](const Tree& t) { return eh.evaluate(t); });
    }
  }
  emit_grammar(o, h, out);
  return kOk;
}

int cmd_binary(const Options& o, std::ostream& out, bool product) {
  const Wtgc a = load_grammar(o.grammar);
  const Wtgc b = load_grammar(o.other);
  const Wtgc h = product ? hadamard(a, b) : disjoint_union(a, b);
  if (o.oracle_size) {
    Evaluator ea(a);
    Evaluator eb(b);
    Evaluator eh(h);
    compare_on_trees(
        o, h.alphabet(), product ? "product" : "union",
        [&](const Tree& t) { return product ? ea.evaluate(t) * eb.evaluate(t) : ea.evaluate(t) + eb.evaluate(t); },
        [&](const Tree& t) { return eh.evaluate(t); });
  }
  emit_grammar(o, h, out);
  return kOk;
}

int cmd_image(const Options& o, std::ostream& out) {
  const Wtgc g = load_grammar(o.grammar);
  const TreeHom h = load_hom(o.hom);
  const Wtgc image = o.stage_one ? image_grammar_stage_one(g, h) : image_grammar(g, h);
  if (o.oracle_size && !o.stage_one) {
    Evaluator ei(image);
    compare_on_trees(o, h.target(), "image", [&](const Tree& u) { return image_weight_oracle(h, g, u); },
                     [&](const Tree& u) { return ei.evaluate(u); });
  }
  emit_grammar(o, image, out);
  return kOk;
}

int cmd_image_eval(const Options& o, std::ostream& out) {
  const Wtgc g = load_grammar(o.grammar);
  const TreeHom h = load_hom(o.hom);
  const Wtgc image = image_grammar(g, h);
  const Tree u = load_tree(o.tree, h.target());
  Evaluator ei(image);
  const Weight w = ei.evaluate(u);
  if (o.oracle_size) {
    compare_on_trees(o, h.target(), "image", [&](const Tree& s) { return image_weight_oracle(h, g, s); },
                     [&](const Tree& s) { return ei.evaluate(s); });
    if (!(image_weight_oracle(h, g, u) == w)) throw OracleFailure("image oracle differs on the given tree");
  }
  emit_weight(o, w, out);
  return kOk;
}

int cmd_support(const Options& o, std::ostream& out, bool complement) {
  const Wtgc g = load_grammar(o.grammar);
  DisambiguateOptions options;
  options.prune_unsat = o.prune;
  const Wtgc s = complement ? complement_support(g, options) : support_automaton(g, options);
  if (o.oracle_size) {
    Evaluator eg(g);
    Evaluator es(s);
    compare_on_trees(
        o, g.alphabet(), complement ? "complement" : "support",
        [&](const Tree& t) {
          const bool in = !eg.evaluate(t).is_zero();
          return (in != complement) ? Semiring::boolean().one() : Semiring::boolean().zero();
        },
        [&](const Tree& t) { return es.evaluate(t); });
    if (auto t = check_unambiguous_upto(s, *o.oracle_size)) throw OracleFailure("ambiguous on " + t->to_string());
  }
  emit_grammar(o, s, out);
  return kOk;
}

int cmd_restrict(const Options& o, std::ostream& out) {
  const Wtgc a = load_grammar(o.grammar);
  const Wtgc b = load_grammar(o.other);
  const Wtgc r = restrict_support(a, b);
  if (o.oracle_size) {
    Evaluator ea(a);
    Evaluator eb(b);
    Evaluator er(r);
    compare_on_trees(
        o, a.alphabet(), "restrict",
        [&](const Tree& t) { return eb.evaluate(t).is_zero() ? a.semiring().zero() : ea.evaluate(t); },
        [&](const Tree& t) { return er.evaluate(t); });
  }
  emit_grammar(o, r, out);
  return kOk;
}

int cmd_disambiguate(const Options& o, std::ostream& out) {
  const Wtgc g = load_grammar(o.grammar);
  const SemiringHom h = pick_semiring_hom(o.semiring_hom, g.semiring());
  DisambiguateOptions options;
  options.prune_unsat = o.prune;
  const Wtgc d = disambiguate(g, h, options);
  if (o.oracle_size) {
    Evaluator eg(g);
    Evaluator ed(d);
    compare_on_trees(o, g.alphabet(), "disambiguate", [&](const Tree& t) { return h(eg.evaluate(t)); },
                     [&](const Tree& t) { return ed.evaluate(t); });
    if (auto t = check_unambiguous_upto(d, *o.oracle_size)) throw OracleFailure("ambiguous on " + t->to_string());
  }
  emit_grammar(o, d, out);
  return kOk;
}

int cmd_pump(const Options& o, std::ostream& out) {
  const Wtgc g = ensure_nonbot_child(load_grammar(o.grammar));
  const Tree t = load_tree(o.tree, g.alphabet());
  std::optional<Derivation> base;
  for (const auto& [q, _] : g.finals()) {
    for (auto& d : derivations(g, t, q)) {
      if (!derivation_weight(g, d).is_zero()) {
        base = std::move(d);
        break;
      }
    }
    if (base) break;
  }
  if (!base) throw PreconditionError("the tree has no nonzero derivation to a final nonterminal");
  for (const auto& p : pump(g, *base, o.count)) {
    if (o.oracle_size) {
      if (auto m = replay(g, p.derivation); !m.empty()) throw OracleFailure("pumped derivation: " + m);
      if (evaluate(g, p.tree).is_zero()) throw OracleFailure("pumped tree outside the support: " + p.tree.to_string());
    }
    out << p.tree << '\n';
  }
  return kOk;
}

int cmd_separation(const Options& o, std::ostream& out) {
  const auto [t, u] = separation_family(o.n);
  out << t << '\n' << u << '\n';
  return kOk;
}

int cmd_decide(const Options& o, std::ostream& out) {
  Wtgc g = load_grammar(o.grammar);
  const bool from_image = !o.hom.empty();
  if (from_image) g = image_grammar(g, load_hom(o.hom));
  const bool empty_question = o.question == "empty";
  const Verdict v = empty_question ? decide_empty(g) : decide_finite(g);
  if (o.oracle_size) {
    const auto support = enumerate_support(g, *o.oracle_size);
    if (empty_question && v.value && !support.empty()) {
      throw OracleFailure("support contains " + support.front().to_string());
    }
  }
  out << "scope: " << (from_image ? "image" : "extension") << '\n';
  if (empty_question) {
    out << (v.value ? "empty" : "nonempty") << '\n';
  } else {
    out << (v.value ? "finite" : "infinite") << '\n';
  }
  if (o.explain) out << v.explanation;
  return v.value ? kOk : kNegative;
}

// --- oracle battery ---------------------------------------------------------

struct Check {
  std::string name;
  std::function<void()> body;
};

int cmd_oracle(const Options& o, std::ostream& out) {
  const std::size_t size = o.oracle_size.value_or(7);
  Options sized = o;
  sized.oracle_size = size;
  namespace fs = std::filesystem;
  const fs::path dir(o.fixtures);
  auto fixture = [&](const std::string& name) { return load_grammar((dir / name).string()); };
  const std::vector<std::string> names = {"fx1.wtg", "fx2_g.wtg", "fx2_gp.wtg", "fx3.wtg", "fx4.wtg", "fx5.wtg", "fx6.wtg"};

  std::vector<Check> checks;
  for (const auto& name : names) {
    checks.push_back({"semantics " + name, [&, name] {
                        const Wtgc g = fixture(name);
                        Evaluator ev(g);
                        compare_on_trees(sized, g.alphabet(), "semantics", [&](const Tree& t) { return derivation_sum(g, t); },
                                         [&](const Tree& t) { return ev.evaluate(t); });
                      }});
    checks.push_back({"round-trip " + name, [&, name] {
                        const Wtgc g = fixture(name);
                        const std::string text = serialize_grammar(g);
                        if (!(parse_grammar(text) == g) || serialize_grammar(parse_grammar(text)) != text) {
                          throw OracleFailure("round-trip differs");
                        }
                      }});
    checks.push_back({"normalize " + name, [&, name] {
                        const Wtgc g = fixture(name);
                        const Wtgc h = normalize(g);
                        Evaluator eg(g);
                        Evaluator eh(h);
                        compare_on_trees(sized, g.alphabet(), "normalize", [&](const Tree& t) { return eg.evaluate(t); },
                                         [&](const Tree& t) { return eh.evaluate(t); });
                      }});
  }
  checks.push_back({"eliminate-zero fx6.wtg", [&] {
                      const Wtgc g = fixture("fx6.wtg");
                      const Wtgc h = eliminate_zero_derivations(g);
                      Evaluator eg(g);
                      Evaluator eh(h);
                      compare_on_trees(sized, g.alphabet(), "eliminate", [&](const Tree& t) { return eg.evaluate(t); },
                                       [&](const Tree& t) { return eh.evaluate(t); });
                      for (const auto& t : enumerate_trees(g.alphabet(), size)) {
                        for (const auto& q : h.nonterminals()) {
                          for (const auto& d : derivations(h, t, q)) {
                            if (derivation_weight(h, d).is_zero()) throw OracleFailure("zero derivation on " + t.to_string());
                          }
                        }
                      }
                    }});
  checks.push_back({"product fx2", [&] {
                      const Wtgc a = fixture("fx2_g.wtg");
                      const Wtgc b = fixture("fx2_gp.wtg");
                      const Wtgc h = hadamard(a, b);
                      Evaluator ea(a);
                      Evaluator eb(b);
                      Evaluator eh(h);
                      compare_on_trees(sized, a.alphabet(), "product", [&](const Tree& t) { return ea.evaluate(t) * eb.evaluate(t); },
                                       [&](const Tree& t) { return eh.evaluate(t); });
                    }});
  checks.push_back({"union fx2", [&] {
                      const Wtgc a = fixture("fx2_g.wtg");
                      const Wtgc b = fixture("fx2_gp.wtg");
                      const Wtgc h = disjoint_union(a, b);
                      Evaluator ea(a);
                      Evaluator eb(b);
                      Evaluator eh(h);
                      compare_on_trees(sized, a.alphabet(), "union", [&](const Tree& t) { return ea.evaluate(t) + eb.evaluate(t); },
                                       [&](const Tree& t) { return eh.evaluate(t); });
                    }});
  checks.push_back({"disambiguate fx2 union", [&] {
                      const Wtgc u = disjoint_union(fixture("fx2_g.wtg"), fixture("fx2_gp.wtg"));
                      const SemiringHom h = support_hom(u.semiring());
                      const Wtgc d = disambiguate(u, h);
                      Evaluator eu(u);
                      Evaluator ed(d);
                      compare_on_trees(sized, u.alphabet(), "disambiguate", [&](const Tree& t) { return h(eu.evaluate(t)); },
                                       [&](const Tree& t) { return ed.evaluate(t); });
                      if (auto t = check_unambiguous_upto(d, size)) throw OracleFailure("ambiguous on " + t->to_string());
                    }});
  checks.push_back({"image fx3", [&] {
                      const Wtgc g = fixture("fx3.wtg");
                      const TreeHom h = load_hom((dir / "fx3.hom").string());
                      const Wtgc image = image_grammar(g, h);
                      Evaluator ei(image);
                      compare_on_trees(sized, h.target(), "image", [&](const Tree& u) { return image_weight_oracle(h, g, u); },
                                       [&](const Tree& u) { return ei.evaluate(u); });
                    }});
  checks.push_back({"decide fx4.wtg", [&] {
                      const Wtgc g = fixture("fx4.wtg");
                      const bool empty = is_support_empty(g);
                      if (empty != enumerate_support(g, size).empty()) throw OracleFailure("emptiness disagrees");
                    }});

  bool ok = true;
  for (const auto& c : checks) {
    try {
      c.body();
      out << "PASS " << c.name << '\n';
    } catch (const Error& e) {
      ok = false;
      out << "FAIL " << c.name << ": " << e.what() << '\n';
    }
  }
  return ok ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted tree grammars with equality and inequality constraints", "wtgc"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::size_t oracle_size = 0;
  app.add_option("--oracle-size", oracle_size, "Cross-check against brute force on all trees up to this size")
      ->check(CLI::Range(std::size_t{0}, kOracleSizeCap));
  app.add_option("--format", o.format, "Weight output format")->check(CLI::IsMember({"text", "json"}));

  auto grammar_option = [&](CLI::App* sub) { sub->add_option("--grammar", o.grammar, "Grammar file")->required(); };
  auto tree_option = [&](CLI::App* sub) { sub->add_option("--tree", o.tree, "Input tree")->required(); };
  auto out_option = [&](CLI::App* sub) { sub->add_option("--out", o.out, "Output file"); };

  auto* eval = app.add_subcommand("eval", "Weight of a tree");
  grammar_option(eval);
  tree_option(eval);
  auto* derivs = app.add_subcommand("derivs", "Complete left-most derivations of a tree");
  grammar_option(derivs);
  tree_option(derivs);
  derivs->add_option("--nonterminal", o.nonterminal, "Only derivations to this nonterminal");
  auto* transform = app.add_subcommand("transform", "Apply an equivalence-preserving transformation");
  transform
      ->add_option("name", o.transform, "Transformation")
      ->required()
      ->check(CLI::IsMember({"normalize", "boolean-finals", "eliminate-zero", "support-grammar", "constraint-determine",
                             "ensure-nonbot-child", "strip-zero"}));
  grammar_option(transform);
  out_option(transform);
  auto* product = app.add_subcommand("product", "Pointwise product of two grammars");
  auto* uni = app.add_subcommand("union", "Pointwise sum of two grammars");
  auto* restrict = app.add_subcommand("restrict", "First grammar restricted to the support of the second");
  for (auto* sub : {product, uni, restrict}) {
    grammar_option(sub);
    sub->add_option("--other", o.other, "Second grammar file")->required();
    out_option(sub);
  }
  auto* image = app.add_subcommand("image", "Grammar for the homomorphic image");
  grammar_option(image);
  image->add_option("--hom", o.hom, "Homomorphism file")->required();
  image->add_flag("--stage-one", o.stage_one, "Stop before relabeling");
  out_option(image);
  auto* image_eval = app.add_subcommand("image-eval", "Weight of a tree in the homomorphic image");
  grammar_option(image_eval);
  image_eval->add_option("--hom", o.hom, "Homomorphism file")->required();
  tree_option(image_eval);
  auto* support = app.add_subcommand("support", "Unambiguous Boolean automaton for the support");
  auto* complement = app.add_subcommand("complement", "Unambiguous Boolean automaton for the complement of the support");
  for (auto* sub : {support, complement}) {
    grammar_option(sub);
    sub->add_flag("--prune", o.prune, "Drop unrealizable constraint splits");
    out_option(sub);
  }
  auto* disamb = app.add_subcommand("disambiguate", "Unambiguous automaton over the image of a semiring homomorphism");
  grammar_option(disamb);
  disamb->add_option("--semiring-hom", o.semiring_hom, "support, identity or mod:<m>");
  disamb->add_flag("--prune", o.prune, "Drop unrealizable constraint splits");
  out_option(disamb);
  auto* pump_cmd = app.add_subcommand("pump", "Pump a tall tree");
  grammar_option(pump_cmd);
  tree_option(pump_cmd);
  pump_cmd->add_option("--count", o.count, "Number of pumped trees");
  auto* separation = app.add_subcommand("separation", "Print the separation trees t_n and t'_n");
  separation->add_option("--n", o.n, "Index")->check(CLI::PositiveNumber);
  auto* decide = app.add_subcommand("decide", "Support emptiness or finiteness");
  decide->add_option("question", o.question, "empty or finite")->required()->check(CLI::IsMember({"empty", "finite"}));
  grammar_option(decide);
  decide->add_option("--hom", o.hom, "Decide for the image under this homomorphism");
  decide->add_flag("--explain", o.explain, "Print the productivity table or the cycle");
  auto* oracle = app.add_subcommand("oracle", "Run the brute-force cross-checks on the fixtures");
  oracle->add_option("--fixtures", o.fixtures, "Fixture directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  if (app.count("--oracle-size") > 0) o.oracle_size = oracle_size;

  try {
    if (*eval) return cmd_eval(o, out);
    if (*derivs) return cmd_derivs(o, out);
    if (*transform) return cmd_transform(o, out);
    if (*product) return cmd_binary(o, out, true);
    if (*uni) return cmd_binary(o, out, false);
    if (*restrict) return cmd_restrict(o, out);
    if (*image) return cmd_image(o, out);
    if (*image_eval) return cmd_image_eval(o, out);
    if (*support) return cmd_support(o, out, false);
    if (*complement) return cmd_support(o, out, true);
    if (*disamb) return cmd_disambiguate(o, out);
    if (*pump_cmd) return cmd_pump(o, out);
    if (*separation) return cmd_separation(o, out);
    if (*decide) return cmd_decide(o, out);
    if (*oracle) return cmd_oracle(o, out);
  } catch (const OracleFailure& e) {
    err << "oracle: " << e.what() << '\n';
    return kNegative;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace wtgc::cli
