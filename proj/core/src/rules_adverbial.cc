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

// Classification of caseless adverbial nominals (:npmod, :adv, :tmod).

#include "rules_internal.h"

namespace mischief {

using internal::Tree;

namespace {

enum class Target { kCompound, kAdv, kTmod, kParataxis, kList };

bool temporal(const Tree& t, const Lexicons& lex, int id) {
  return t.in(lex.temporal_nouns, id) || t.in(lex.timezones, id) ||
         (t.capitalized(id) && (t.in(lex.weekdays, id) || t.in(lex.months, id)));
}

bool rate_dependent(const Tree& t, int d, int h) {
  if (d < h) return false;
  bool indefinite = false;
  for (int k : t.kids(d))
    if (t.rel_is(k, "det") && t.form_is(k, {"a", "an", "per", "each"}))
      indefinite = true;
  if (!indefinite) return false;
  return t.upos_in(h, {"SYM", "NUM"}) || t.child_with(h, "nummod") != 0 ||
         t.form_is(h, {"times", "once", "twice"});
}

// Noun directly before an attributive adjective or participle it forms a
// compound with ("4 year old kitten").
bool compound_candidate(const Tree& t, int d, int h) {
  if (d + 1 != h || !t.upos_in(d, {"NOUN"}) || t.plural(d)) return false;
  if (t.upos_in(h, {"NOUN"})) return true;
  if (!t.upos_in(h, {"ADJ"}) && !internal::participle(t, h)) return false;
  int n = t.head(h);
  return n > h && t.rel_is(h, "amod") && t.nominal(n);
}

bool verbless(const Tree& t) {
  for (int i = 1; i <= t.size(); ++i)
    if (t.upos_in(i, {"VERB", "AUX"})) return false;
  return true;
}

struct Choice {
  Target target;
  bool rate = false;
};

Choice classify(const Tree& t, const Lexicons& lex, int d, int h) {
  if (compound_candidate(t, d, h)) return {Target::kCompound};
  int lo = t.subtree_min(d, true);
  bool set_off = d > h && t.has(lo - 1) && t.punct(lo - 1) && lo - 1 > h;
  if (set_off && t.in(lex.locales, d)) return {Target::kAdv};
  bool year = internal::is_digit_string(t.tok(d).form) &&
              t.tok(d).form.size() == 4;
  if (set_off && (temporal(t, lex, d) || year)) return {Target::kTmod};
  if (set_off) return {Target::kParataxis};
  if (rate_dependent(t, d, h))
    return {temporal(t, lex, d) ? Target::kTmod : Target::kAdv, true};
  if (temporal(t, lex, d) || t.in(lex.temporal_adverbs, h))
    return {Target::kTmod};
  if (t.upos_in(d, {"PROPN"}) && verbless(t)) return {Target::kList};
  return {Target::kAdv};
}

}  // namespace

std::vector<Diagnostic> classify_adverbial_np(const Sentence& sent,
                                              const RuleConfig& cfg) {
  Tree t(sent);
  const Lexicons& lex = cfg.lexicons;
  std::vector<Diagnostic> out;
  for (int d = 1; d <= t.size(); ++d) {
    std::string_view b = t.base(d), sub = t.subtype(d);
    if (b != "nmod" && b != "obl") continue;
    if (sub != "npmod" && sub != "adv" && sub != "tmod" &&
        sub != cfg.adverbial_subtype_name)
      continue;
    int h = t.head(d);
    if (h == 0) continue;
    Choice c = classify(t, lex, d, h);
    // Existing :tmod labels are only corrected for non-temporal measures.
    if (sub == "tmod" && c.target != Target::kCompound) {
      if (!t.in(lex.measure_units, d) || temporal(t, lex, d) ||
          t.in(lex.temporal_adverbs, h))
        continue;
      c.target = Target::kAdv;
    }
    std::string label;
    ConstructionKind kind = ConstructionKind::kAdverbialNP;
    Confidence conf = Confidence::kHigh;
    switch (c.target) {
      case Target::kCompound:
        label = "compound";
        break;
      case Target::kAdv:
        label = internal::adverbial(cfg, b);
        break;
      case Target::kTmod:
        label = std::string(b) + ":tmod";
        kind = ConstructionKind::kTemporalNP;
        break;
      case Target::kParataxis:
        label = "parataxis";
        break;
      case Target::kList:
        label = "list";
        conf = Confidence::kHeuristic;
        break;
    }
    if (c.rate) kind = ConstructionKind::kRate;
    PlanBuilder plan(sent, "");
    plan.set_deprel(d, label);
    internal::push(out, internal::make_diagnostic(
                            sent, kind, {std::min(d, h), std::max(d, h)},
                            plan.build(),
                            "adverbial nominal '" + t.tok(d).form + "' (" +
                                t.tok(d).deprel + " of '" + t.tok(h).form +
                                "') should be " + label,
                            conf, t.lower(d)));
  }
  return out;
}

}  // namespace mischief
