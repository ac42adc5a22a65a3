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

// Name-internal structure, numbered entities and name suffixes.

#include <algorithm>
#include <cctype>

#include "rules_internal.h"
#include "strings.h"

namespace mischief {

using internal::Internal;
using internal::Tree;

namespace {

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

// h plus its rightward flat dependents, when they form a contiguous,
// punctuation-free run dominated by h.
std::vector<int> flat_run(const Tree& t, int h) {
  int hi = h;
  for (int k : t.kids(h))
    if (k > h && t.rel_is(k, "flat") && t.subtype(k) != "foreign")
      hi = std::max(hi, k);
  if (hi == h) return {};
  for (int i = h; i <= hi; ++i)
    if (!t.dominates(h, i) || t.punct(i)) return {};
  return range(h, hi);
}

void analyzable_name(const Tree& t, const RuleConfig& cfg, int h,
                     std::vector<Diagnostic>& out) {
  const Lexicons& lex = cfg.lexicons;
  std::vector<int> run = flat_run(t, h);
  if (run.size() < 2) return;
  int type = run.back();
  if (!t.capitalized(type) || !t.in(lex.entity_types_right, type)) return;
  if (t.has(h - 1) && internal::house_number_shape(t.tok(h - 1).form)) return;
  std::vector<int> rest(run.begin(), run.end() - 1);
  std::size_t adj = 0;
  while (adj < rest.size() && t.upos_in(rest[adj], {"ADJ"})) ++adj;
  Internal in;
  std::vector<int> names(rest.begin() + adj, rest.end());
  int adj_head = names.empty() ? type : names.front();
  for (std::size_t i = 0; i < adj; ++i) in[rest[i]] = {adj_head, "amod"};
  bool all_propn = !names.empty() &&
                   std::all_of(names.begin(), names.end(), [&](int id) {
                     return t.upos_in(id, {"PROPN"});
                   });
  if (names.size() == 1) {
    in[names[0]] = {type, "compound"};
  } else if (all_propn) {
    in[names[0]] = {type, "compound"};
    for (std::size_t i = 1; i < names.size(); ++i)
      in[names[i]] = {names[0], "flat"};
  } else {
    for (int id : names) in[id] = {type, "compound"};
  }
  PlanBuilder plan(t.sentence(), "");
  if (!internal::reroot(plan, t, run, type, in)) return;
  internal::push(out, internal::make_diagnostic(
                          t.sentence(), ConstructionKind::kAnalyzableName, run,
                          plan.build(),
                          "'" + t.tok(type).form +
                              "' is the head of an analyzable name; the "
                              "modifiers should be compound",
                          Confidence::kHigh, t.tok(type).form));
}

bool loose_modifier(const Tree& t, int d) {
  std::string_view b = t.base(d);
  return b == "amod" || b == "compound" || b == "nmod" || b == "dep" ||
         b == "flat" || b == "appos" || b == "nummod";
}

void cardinal_direction(const Tree& t, const RuleConfig& cfg, int d,
                        std::vector<Diagnostic>& out) {
  const Lexicons& lex = cfg.lexicons;
  bool noun = t.in(lex.directions, d);
  bool adj = t.in(lex.direction_adjectives, d);
  if (!noun && !adj) return;
  PlanBuilder plan(t.sentence(), "");
  std::vector<int> span;
  const std::string rel = noun ? "compound" : "amod";
  int n = d + 1;
  if (t.capitalized(d) && t.has(n) && t.head(n) == d && t.rel_is(n, "flat") &&
      flat_run(t, d).size() == 2 && t.upos_in(n, {"PROPN"})) {
    if (!internal::reroot(plan, t, {d, n}, n, {{d, {n, rel}}})) return;
    span = {d, n};
  } else {
    int h = t.head(d);
    if (h == 0 || h < d || !t.nominal(h) || !loose_modifier(t, d)) return;
    for (int i = d + 1; i < h; ++i)
      if (t.punct(i)) return;
    plan.set_deprel(d, rel);
    span = {d, h};
  }
  if (noun && !t.nominal(d)) plan.set_upos(d, "NOUN");
  if (adj) plan.set_upos(d, "ADJ");
  internal::push(out, internal::make_diagnostic(
                          t.sentence(), ConstructionKind::kCardinalDirection,
                          span, plan.build(),
                          "direction '" + t.tok(d).form +
                              "' should be " + rel + " of the name it modifies",
                          Confidence::kHigh, t.lower(d)));
}

void entity_type_first(const Tree& t, const RuleConfig& cfg, int type,
                       std::vector<Diagnostic>& out) {
  const Lexicons& lex = cfg.lexicons;
  if (!t.capitalized(type) || !t.in(lex.entity_types_left, type)) return;
  if (t.has(type - 1) && t.upos_in(type - 1, {"PROPN"}) &&
      t.capitalized(type - 1))
    return;
  int e = type;
  while (t.has(e + 1) && t.upos_in(e + 1, {"PROPN"}) && t.capitalized(e + 1))
    ++e;
  if (e == type) return;
  if (t.in(lex.entity_types_right, e) || t.in(lex.street_types, e)) return;
  std::vector<int> span = range(type, e);
  for (int id : span)
    if (t.in(lex.titles, id)) return;
  Internal in;
  in[type + 1] = {type, "compound"};
  for (int id = type + 2; id <= e; ++id) in[id] = {type + 1, "flat"};
  PlanBuilder plan(t.sentence(), "");
  if (!internal::reroot(plan, t, span, type, in)) return;
  internal::push(out, internal::make_diagnostic(
                          t.sentence(), ConstructionKind::kEntityTypeFirst,
                          span, plan.build(),
                          "entity type '" + t.tok(type).form +
                              "' heads the name; '" + t.tok(type + 1).form +
                              "' should be its compound",
                          Confidence::kHigh, t.tok(type).form));
}

bool identifier_shape(const Tree& t, int id) {
  const std::string& f = t.tok(id).form;
  if (t.upos_in(id, {"NUM"}) && !f.empty()) return true;
  bool digit = false;
  for (char c : f) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else if (!std::isalpha(static_cast<unsigned char>(c)) && c != '.') {
      return false;
    }
  }
  return digit;
}

bool plural_numbering_word(const Tree& t, int id) {
  return t.plural(id) || t.form_is(id, {"numbers", "nos.", "nos"});
}

// Dependents of an identifier that belong to it rather than to the entity:
// the rest of a range, punctuation.
bool identifier_part(const Tree& t, int k) {
  return t.upos_in(k, {"NUM", "PUNCT", "SYM"});
}

struct Numbered {
  int type = 0;
  int word = 0;  // numbering word between type and identifier, or 0
  int id = 0;
  bool name_version = false;
};

std::optional<Numbered> numbered_at(const Tree& t, const Lexicons& lex, int x) {
  if (!identifier_shape(t, x) && !internal::roman_numeral(t.tok(x).form))
    return std::nullopt;
  Numbered n;
  n.id = x;
  n.type = x - 1;
  if (t.has(n.type) && t.in(lex.numbering_words, n.type) &&
      !t.in(lex.numbering_types, n.type)) {
    n.word = n.type;
    n.type = x - 2;
  }
  if (!t.has(n.type) || t.punct(n.type)) return std::nullopt;
  if (t.in(lex.months, n.type) || t.in(lex.weekdays, n.type) ||
      t.in(lex.holidays, n.type))
    return std::nullopt;
  if (t.in(lex.numbering_types, n.type)) return n;
  const std::string& f = t.tok(x).form;
  if (t.upos_in(n.type, {"PROPN"}) && t.capitalized(n.type) &&
      (internal::version_shape(f) || internal::roman_numeral(f))) {
    n.name_version = true;
    return n;
  }
  return std::nullopt;
}

void numbered_entity(const Tree& t, const RuleConfig& cfg, int x,
                     std::vector<Diagnostic>& out) {
  auto n = numbered_at(t, cfg.lexicons, x);
  if (!n) return;
  std::string rel = internal::numbered_relation(cfg, n->name_version);
  Internal in;
  in[x] = {n->type, rel};
  if (n->word)
    in[n->word] = {x, plural_numbering_word(t, n->word) ? "nmod:desc"
                                                        : "compound"};
  std::vector<int> span = range(n->type, x);
  PlanBuilder plan(t.sentence(), "");
  if (!internal::reroot(plan, t, span, n->type, in,
                        [&](int k) { return identifier_part(t, k); }))
    return;
  internal::push(out, internal::make_diagnostic(
                          t.sentence(), ConstructionKind::kNumberedEntity, span,
                          plan.build(),
                          "identifier '" + t.tok(x).form + "' should attach to '" +
                              t.tok(n->type).form + "' as " + rel,
                          Confidence::kHigh, t.tok(n->type).form));
}

void number_word(const Tree& t, const RuleConfig& cfg, int w,
                 std::vector<Diagnostic>& out) {
  const Lexicons& lex = cfg.lexicons;
  if (!t.in(lex.numbering_words, w) || t.in(lex.numbering_types, w)) return;
  int x = w + 1;
  if (!t.has(x) || !identifier_shape(t, x)) return;
  if (numbered_at(t, lex, x)) return;
  std::string rel = plural_numbering_word(t, w) ? "nmod:desc" : "compound";
  PlanBuilder plan(t.sentence(), "");
  if (!internal::reroot(plan, t, {w, x}, x, {{w, {x, rel}}})) return;
  internal::push(out, internal::make_diagnostic(
                          t.sentence(), ConstructionKind::kNumberWordPremodifier,
                          {w, x}, plan.build(),
                          "'" + t.tok(w).form + "' premodifies the number '" +
                              t.tok(x).form + "' as " + rel,
                          Confidence::kHigh, t.lower(w)));
}

void numeric_range(const Tree& t, int a, std::vector<Diagnostic>& out) {
  int dash = a + 1, b = a + 2;
  if (!t.has(b) || !internal::is_dash(t.tok(dash).form)) return;
  if (!identifier_shape(t, a) || !identifier_shape(t, b)) return;
  if (!internal::is_digit_string(t.tok(a).form) ||
      !internal::is_digit_string(t.tok(b).form))
    return;
  if (!internal::phone_span(t, a).empty()) return;
  PlanBuilder plan(t.sentence(), "");
  Internal in = {{b, {a, "nmod"}}, {dash, {b, "punct"}}};
  std::vector<int> span = {a, dash, b};
  if (t.head(a) == t.head(b) && t.head(dash) != a && t.head(dash) != b) {
    plan.attach(b, a, "nmod");
    plan.attach(dash, b, "punct");
  } else if (!internal::reroot(plan, t, span, a, in)) {
    if (t.head(a) != t.head(b)) return;
    plan.attach(b, a, "nmod");
    plan.attach(dash, b, "punct");
  }
  internal::push(out, internal::make_diagnostic(
                          t.sentence(), ConstructionKind::kNumericRange, span,
                          plan.build(),
                          "range end '" + t.tok(b).form +
                              "' should be nmod of '" + t.tok(a).form + "'",
                          Confidence::kHigh, "range"));
}

// The name a suffix at `s` follows, skipping one comma; 0 if none.
int suffixed_name(const Tree& t, int s, int* comma) {
  int p = s - 1;
  *comma = 0;
  if (t.has(p) && internal::is_comma(t.tok(p).form)) {
    *comma = p;
    --p;
  }
  if (!t.has(p) || !t.upos_in(p, {"PROPN"})) return 0;
  int h = internal::name_head(t, p);
  // Walk up a right-headed compound name to its head.
  while (t.head(h) > h && t.head(h) < s && t.rel_is(h, "compound")) h = t.head(h);
  return internal::name_head(t, h);
}

void attach_suffix(const Tree& t, ConstructionKind kind, int s,
                   const std::string& rel, std::vector<Diagnostic>& out) {
  int comma = 0;
  int h = suffixed_name(t, s, &comma);
  if (h == 0) return;
  PlanBuilder plan(t.sentence(), "");
  if (t.dominates(s, h)) {
    plan.attach(h, t.head(s), t.tok(s).deprel);
    for (int k : t.kids(s))
      if (k != h && k < s && k != comma && !t.dominates(h, k))
        plan.set_head(k, h);
  }
  plan.attach(s, h, rel);
  if (comma) plan.attach(comma, s, "punct");
  std::vector<int> span = {h, s};
  if (comma) span.insert(span.begin() + 1, comma);
  internal::push(out, internal::make_diagnostic(
                          t.sentence(), kind, span, plan.build(),
                          "suffix '" + t.tok(s).form + "' should be " + rel +
                              " of '" + t.tok(h).form + "'",
                          Confidence::kHigh, t.tok(s).form));
}

void suffix(const Tree& t, const RuleConfig& cfg, int s,
            std::vector<Diagnostic>& out) {
  const Lexicons& lex = cfg.lexicons;
  if (t.in(lex.business_suffixes_amod, s)) {
    attach_suffix(t, ConstructionKind::kBusinessSuffix, s, "amod", out);
  } else if (t.in(lex.business_suffixes_desc, s)) {
    attach_suffix(t, ConstructionKind::kBusinessSuffix, s, "nmod:desc", out);
  } else if (t.in(lex.personal_suffixes_amod, s)) {
    attach_suffix(t, ConstructionKind::kPersonalSuffix, s, "amod", out);
  } else if (t.in(lex.personal_suffixes_desc, s)) {
    attach_suffix(t, ConstructionKind::kPersonalSuffix, s, "nmod:desc", out);
  }
}

// "Richard the Third" and "Jack the Ripper".
void the_suffix(const Tree& t, const RuleConfig& cfg, int the,
                std::vector<Diagnostic>& out) {
  int p = the - 1, x = the + 1;
  if (!t.has(p) || !t.has(x) || t.lower(the) != "the") return;
  if (!t.upos_in(p, {"PROPN"}) || !t.capitalized(x)) return;
  int h = internal::name_head(t, p);
  bool generational = t.in(cfg.lexicons.generational, x);
  PlanBuilder plan(t.sentence(), "");
  ConstructionKind kind;
  std::string rel;
  if (generational) {
    kind = ConstructionKind::kPersonalSuffix;
    rel = "amod";
  } else {
    if (t.upos_in(x, {"ADJ"}) || !t.nominal(x)) return;
    int xh = t.head(x);
    bool in_name = xh == h || (xh != 0 && internal::name_head(t, xh) == h);
    std::string_view b = t.base(x);
    if (!in_name || !(b == "flat" || b == "compound" || b == "nmod" ||
                      b == "dep" || b == "appos"))
      return;
    kind = ConstructionKind::kNickname;
    rel = "appos";
  }
  if (t.dominates(x, h)) return;
  plan.attach(x, h, rel);
  plan.attach(the, x, "det");
  internal::push(out, internal::make_diagnostic(
                          t.sentence(), kind, {p, the, x}, plan.build(),
                          "'the " + t.tok(x).form + "' should be " + rel +
                              " of '" + t.tok(h).form + "'",
                          Confidence::kHigh, t.tok(x).form));
}

void parenthetical(const Tree& t, const RuleConfig& cfg, int d,
                   std::vector<Diagnostic>& out) {
  int h = t.head(d);
  if (h == 0 || h > d || !t.upos_in(h, {"PROPN"})) return;
  if (t.subtype(d) == "npmod" || t.rel_is(d, "parataxis")) return;
  if (t.in(cfg.lexicons.months, h)) return;
  if (!internal::parenthetical_shape(t, d)) return;
  int lo = t.subtree_min(d, true);
  if (!t.has(lo - 1)) return;
  const std::string& before = t.tok(lo - 1).form;
  if (before != "," && before != "(") return;
  int name = internal::name_head(t, h);
  PlanBuilder plan(t.sentence(), "");
  plan.attach(d, name, "parataxis");
  internal::push(out, internal::make_diagnostic(
                          t.sentence(),
                          ConstructionKind::kParentheticalDescriptor,
                          {name, d}, plan.build(),
                          "set-off '" + t.tok(d).form + "' after '" +
                              t.tok(name).form + "' should be parataxis",
                          Confidence::kHigh, t.lower(d)));
}

}  // namespace

std::vector<Diagnostic> detect_name_internal(const Sentence& sent,
                                             const RuleConfig& cfg) {
  Tree t(sent);
  std::vector<Diagnostic> out;
  for (int id = 1; id <= t.size(); ++id) {
    analyzable_name(t, cfg, id, out);
    cardinal_direction(t, cfg, id, out);
    entity_type_first(t, cfg, id, out);
  }
  return out;
}

std::vector<Diagnostic> detect_numbered_entities(const Sentence& sent,
                                                 const RuleConfig& cfg) {
  Tree t(sent);
  std::vector<Diagnostic> out;
  for (int id = 1; id <= t.size(); ++id) {
    numbered_entity(t, cfg, id, out);
    number_word(t, cfg, id, out);
    numeric_range(t, id, out);
  }
  return out;
}

std::vector<Diagnostic> detect_suffixes_and_parentheticals(
    const Sentence& sent, const RuleConfig& cfg) {
  Tree t(sent);
  std::vector<Diagnostic> out;
  for (int id = 1; id <= t.size(); ++id) {
    suffix(t, cfg, id, out);
    the_suffix(t, cfg, id, out);
    parenthetical(t, cfg, id, out);
  }
  return out;
}

}  // namespace mischief
