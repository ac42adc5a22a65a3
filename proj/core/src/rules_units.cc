// Copyright 2026 The Mischief Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Approximators, unit expressions and spelled-out numbers.

#include <algorithm>

#include "mischief/number_grammar.h"
#include "rules_internal.h"

namespace mischief {

using internal::Internal;
using internal::Tree;

namespace {

// Second word of a multiword approximator starting at `a`, or 0.
int multiword_approximator(const Tree& t, int a) {
  if (!t.has(a + 1)) return 0;
  std::string first = t.lower(a), second = t.lower(a + 1);
  if ((first == "more" || first == "less" || first == "fewer") &&
      second == "than")
    return a + 1;
  if (first == "up" && second == "to") return a + 1;
  if (first == "at" && (second == "least" || second == "most")) return a + 1;
  return 0;
}

bool quantity(const Tree& t, int q) {
  return t.has(q) && t.upos_in(q, {"SYM", "NUM"});
}

void approximator(const Tree& t, const RuleConfig& cfg, int a,
                  std::vector<Diagnostic>& out) {
  int second = multiword_approximator(t, a);
  if (!second && (!t.in(cfg.lexicons.approximators, a) ||
                  t.punct(a) || t.upos_in(a, {"NUM", "SYM"})))
    return;
  int q = (second ? second : a) + 1;
  if (!quantity(t, q)) return;
  if (t.dominates(a, q)) return;
  int ha = t.head(a);
  bool high = ha == q || (second && (ha == t.head(q) || ha == second));
  PlanBuilder plan(t.sentence(), "");
  plan.attach(a, q, "advmod");
  std::vector<int> span = {a, q};
  if (second) {
    plan.attach(second, a, "fixed");
    span.push_back(second);
    for (int k : t.kids(second))
      if (k != a) plan.set_head(k, a);
  }
  std::string key = t.lower(a);
  if (second) key += " " + t.lower(second);
  internal::push(out, internal::make_diagnostic(
                          t.sentence(), ConstructionKind::kApproximator, span,
                          plan.build(),
                          "approximator '" + key + "' should be advmod of '" +
                              t.tok(q).form + "'",
                          high ? Confidence::kHigh : Confidence::kHeuristic,
                          key));
}

bool scale(const Tree& t, const Lexicons& lex, int id) {
  return t.has(id) && t.capitalized(id) && t.in(lex.temperature_scales, id);
}

void unit_expression(const Tree& t, const RuleConfig& cfg, int i,
                     std::vector<Diagnostic>& out) {
  const Lexicons& lex = cfg.lexicons;
  PlanBuilder plan(t.sentence(), "");
  std::vector<int> span;
  std::string key;
  if (t.form_is(i, {"degree", "degrees"}) && scale(t, lex, i + 1)) {
    span = {i, i + 1};
    if (!internal::reroot(plan, t, span, i, {{i + 1, {i, "compound"}}}))
      return;
    key = t.tok(i + 1).form;
  } else if (internal::is_digit_string(t.tok(i).form) &&
             scale(t, lex, i + 1) && t.tok(i + 1).form.size() <= 2) {
    span = {i, i + 1};
    if (!internal::reroot(plan, t, span, i + 1, {{i, {i + 1, "nummod"}}}))
      return;
    key = t.tok(i + 1).form;
  } else if (t.has(i + 3) && internal::is_digit_string(t.tok(i).form) &&
             t.form_is(i + 1, {"'", "′", "’"}) &&
             internal::is_digit_string(t.tok(i + 2).form) &&
             t.form_is(i + 3, {"\"", "″", "''", "”"})) {
    span = {i, i + 1, i + 2, i + 3};
    Internal in = {{i, {i + 1, "nummod"}},
                   {i + 2, {i + 3, "nummod"}},
                   {i + 3, {i + 1, "conj"}}};
    if (!internal::reroot(plan, t, span, i + 1, in)) return;
    key = "feet-inches";
  } else {
    return;
  }
  internal::push(out, internal::make_diagnostic(
                          t.sentence(), ConstructionKind::kUnitExpression, span,
                          plan.build(),
                          "unit expression '" + t.tok(span.front()).form +
                              " ... " + t.tok(span.back()).form +
                              "' has a nonstandard structure",
                          Confidence::kHigh, key));
}

bool number_word(const Tree& t, int id) {
  return t.has(id) && is_number_word(t.lower(id));
}

bool connector(const Tree& t, int id) {
  return t.form_is(id, {"and", "point", "-", ","});
}

// Returns the last token of the run starting at `i`, or 0.
int spelled_number(const Tree& t, int i, std::vector<Diagnostic>& out) {
  if (!number_word(t, i) || connector(t, i) || number_word(t, i - 1)) return 0;
  int e = i;
  while (number_word(t, e + 1)) ++e;
  int end = e;
  while (end > i && connector(t, end)) --end;
  if (end == i) return e;
  if (t.has(end + 1) && t.tok(end + 1).form == "-") return e;
  std::vector<std::string> words;
  std::vector<int> span;
  for (int id = i; id <= end; ++id) {
    words.push_back(t.lower(id));
    span.push_back(id);
  }
  NumberTree tree;
  try {
    tree = parse_number(words);
  } catch (const NumberError&) {
    return e;
  }
  std::vector<Token> tokens = number_to_conllu(tree);
  Internal in;
  for (std::size_t k = 0; k < tree.size(); ++k) {
    if (static_cast<int>(k) + 1 == tree.root) continue;
    in[span[k]] = {span[tree.heads[k] - 1], tree.deprels[k]};
  }
  int top = span[tree.root - 1];
  PlanBuilder plan(t.sentence(), "");
  if (!internal::reroot(plan, t, span, top, in)) return e;
  for (std::size_t k = 0; k < tree.size(); ++k)
    plan.set_upos(span[k], tokens[k].upos);
  internal::push(out, internal::make_diagnostic(
                          t.sentence(), ConstructionKind::kSpelledNumber, span,
                          plan.build(),
                          "spelled-out number with value " + tree.value.str() +
                              " should be headed by '" + t.tok(top).form + "'",
                          Confidence::kHigh, tree.value.str()));
  return e;
}

}  // namespace

std::vector<Diagnostic> detect_units_and_approximators(const Sentence& sent,
                                                       const RuleConfig& cfg) {
  Tree t(sent);
  std::vector<Diagnostic> out;
  for (int id = 1; id <= t.size(); ++id) {
    approximator(t, cfg, id, out);
    unit_expression(t, cfg, id, out);
  }
  for (int id = 1; id <= t.size(); ++id) id = std::max(id, spelled_number(t, id, out));
  return out;
}

}  // namespace mischief
