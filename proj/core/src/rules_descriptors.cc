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

// Appellations, embellishments and other descriptor modifiers of names, plus
// the appositive criteria.

#include <algorithm>
#include <map>

#include "rules_internal.h"

namespace mischief {

using internal::Tree;

namespace {

using internal::Internal;

bool descriptor_head(const Tree& t, const Lexicons& lex, int id) {
  return t.in(lex.titles, id) || t.in(lex.occupations, id);
}

std::string premodifier_relation(const Tree& t, int id) {
  if (t.upos_in(id, {"ADJ"})) return "amod";
  if (t.upos_in(id, {"DET"})) return "det";
  if (t.upos_in(id, {"NUM"})) return "nummod";
  return "compound";
}

bool blocks_descriptor(const Tree& t, const Lexicons& lex, int id) {
  return t.in(lex.entity_types_left, id) || t.in(lex.numbering_types, id) ||
         t.in(lex.months, id) || t.in(lex.weekdays, id) ||
         t.in(lex.holidays, id) || t.in(lex.directions, id) ||
         t.in(lex.direction_adjectives, id) || t.in(lex.numbering_words, id) ||
         t.in(lex.measure_units, id) || t.in(lex.temperature_scales, id) ||
         t.in(lex.meridiems, id) || t.in(lex.timezones, id) ||
         t.in(lex.eras, id);
}

bool suffix_word(const Tree& t, const Lexicons& lex, int id) {
  return t.in(lex.business_suffixes_amod, id) ||
         t.in(lex.business_suffixes_desc, id) ||
         t.in(lex.personal_suffixes_amod, id) ||
         t.in(lex.personal_suffixes_desc, id) || t.in(lex.generational, id);
}

// Members of the flat group headed by `h`, including an unpunctuated
// appositive proper noun.
std::vector<int> flat_group(const Tree& t, int h) {
  std::vector<int> g = {h};
  for (int k : t.kids(h)) {
    if (k < h) continue;
    if (t.rel_is(k, "flat") && t.subtype(k) != "foreign") {
      g.push_back(k);
    } else if (t.rel_is(k, "appos") && t.upos_in(k, {"PROPN"})) {
      bool punct_between = false;
      for (int i = h + 1; i < k; ++i) punct_between |= t.punct(i);
      if (!punct_between) g.push_back(k);
    }
  }
  std::sort(g.begin(), g.end());
  return g;
}

struct Segment {
  int head = 0;
  bool lexical = false;
};

// Case A: the descriptor and the name share one flat group.
void flat_descriptor(const Tree& t, const RuleConfig& cfg, int h,
                     std::vector<Diagnostic>& out) {
  const Lexicons& lex = cfg.lexicons;
  std::vector<int> group = flat_group(t, h);
  if (group.size() < 2 || group.front() != h) return;
  const int lo = group.front(), hi = group.back();
  std::vector<int> region;
  for (int i = lo; i <= hi; ++i) {
    if (!t.dominates(h, i)) return;
    if (t.punct(i) || t.upos_in(i, {"CCONJ"})) return;
    if (suffix_word(t, lex, i)) return;
    region.push_back(i);
  }
  if (t.in(lex.entity_types_right, hi)) return;

  const int n = static_cast<int>(region.size());
  int j = n;
  while (j > 0 && t.upos_in(region[j - 1], {"PROPN"}) &&
         !descriptor_head(t, lex, region[j - 1]) &&
         !blocks_descriptor(t, lex, region[j - 1]))
    --j;
  if (j == 0 || j == n) return;
  if (t.lower(region[j - 1]) == "of") ++j;
  if (j >= n) return;

  std::vector<int> desc(region.begin(), region.begin() + j);
  std::vector<int> name(region.begin() + j, region.end());
  for (int id : desc)
    if (blocks_descriptor(t, lex, id)) return;

  Internal internal;
  std::vector<Segment> segs;
  std::vector<int> pending;
  for (std::size_t i = 0; i < desc.size();) {
    int id = desc[i];
    if (t.lower(id) == "of") {
      if (segs.empty() || !pending.empty()) return;
      std::size_t k = i + 1;
      while (k < desc.size() && !descriptor_head(t, lex, desc[k])) ++k;
      if (k == i + 1) return;
      int obj = desc[k - 1];
      internal[id] = {obj, "case"};
      for (std::size_t m = i + 1; m + 1 < k; ++m)
        internal[desc[m]] = {obj, premodifier_relation(t, desc[m])};
      internal[obj] = {segs.back().head, "nmod"};
      i = k;
      continue;
    }
    if (descriptor_head(t, lex, id)) {
      for (int p : pending) internal[p] = {id, premodifier_relation(t, p)};
      pending.clear();
      segs.push_back({id, true});
    } else if (t.upos_in(id, {"ADJ", "DET", "NUM", "NOUN", "PROPN"})) {
      pending.push_back(id);
    } else {
      return;
    }
    ++i;
  }
  if (!pending.empty()) {
    int last = pending.back();
    if (!t.upos_in(last, {"NOUN"})) return;
    pending.pop_back();
    for (int p : pending) internal[p] = {last, premodifier_relation(t, p)};
    segs.push_back({last, false});
  }
  if (segs.empty()) return;

  const int name_head = name.front();
  for (std::size_t i = 1; i < name.size(); ++i)
    internal[name[i]] = {name_head, "flat"};
  bool title = false, all_lexical = true;
  for (const Segment& s : segs) {
    internal[s.head] = {name_head, "nmod:desc"};
    title |= t.in(lex.titles, s.head);
    all_lexical &= s.lexical;
  }

  PlanBuilder plan(t.sentence(), "");
  plan.restructure(region, name_head, internal);
  ConstructionKind kind =
      title ? ConstructionKind::kAppellation : ConstructionKind::kEmbellishment;
  std::string what = title ? "title" : "descriptor";
  internal::push(
      out, internal::make_diagnostic(
               t.sentence(), kind, region, plan.build(),
               what + " '" + t.tok(segs.front().head).form +
                   "' should modify the name '" + t.tok(name_head).form +
                   "' as nmod:desc",
               all_lexical ? Confidence::kHigh : Confidence::kHeuristic,
               t.tok(segs.front().head).form));
}

bool bare(const Tree& t, int id) {
  for (int k : t.kids(id)) {
    if (t.rel_is(k, "det")) return false;
    if (t.tok(k).deprel == "nmod:poss") return false;
  }
  return true;
}

bool has_proper_conjunct(const Tree& t, int id) {
  for (int k : t.kids(id))
    if (t.rel_is(k, "conj") && t.upos_in(k, {"PROPN"})) return true;
  return false;
}

// Case B: a descriptor attached to the following name by another relation.
void attached_descriptor(const Tree& t, const RuleConfig& cfg, int d,
                         std::vector<Diagnostic>& out) {
  const Lexicons& lex = cfg.lexicons;
  int n = t.head(d);
  if (n == 0 || n < d || !t.upos_in(n, {"PROPN"})) return;
  if (!t.nominal(d) || t.tok(d).deprel == "nmod:desc") return;
  std::string_view b = t.base(d);
  if (b != "compound" && b != "flat" && b != "appos" && b != "dep" &&
      !(b == "nmod" && !t.child_with(d, "case")))
    return;
  if (!bare(t, d) || blocks_descriptor(t, lex, d) || suffix_word(t, lex, d))
    return;
  for (int i = d + 1; i < n; ++i)
    if (t.punct(i)) return;
  bool lexical = descriptor_head(t, lex, d);
  bool agreement = t.plural(d) && has_proper_conjunct(t, n);
  if (!lexical && !agreement) return;
  PlanBuilder plan(t.sentence(), "");
  plan.set_deprel(d, "nmod:desc");
  bool title = t.in(lex.titles, d);
  internal::push(
      out, internal::make_diagnostic(
               t.sentence(),
               title ? ConstructionKind::kAppellation
                     : ConstructionKind::kEmbellishment,
               {d, n}, plan.build(),
               "'" + t.tok(d).form + "' modifies the name '" + t.tok(n).form +
                   "' and should be nmod:desc, not " + t.tok(d).deprel,
               Confidence::kHigh, t.tok(d).form));
}

// A bare appositive nominal after a name ("Oedipus, King of Thebes").
bool post_name_candidate(const Tree& t, int d) {
  int h = t.head(d);
  return h != 0 && d > h && t.rel_is(d, "appos") &&
         t.upos_in(h, {"PROPN"}) && t.upos_in(d, {"NOUN", "PROPN"}) &&
         bare(t, d) && !t.plural(d) && !internal::parenthetical_shape(t, d);
}

void post_name(const Tree& t, const RuleConfig& cfg, int d,
               std::vector<Diagnostic>& out) {
  if (!post_name_candidate(t, d)) return;
  // "12 Main St." after a name is an address segment.
  if (t.in(cfg.lexicons.street_types, d) && !t.kids(d).empty()) return;
  bool lexical = descriptor_head(t, cfg.lexicons, d);
  if (!lexical && !t.upos_in(d, {"NOUN"})) return;
  int h = t.head(d);
  PlanBuilder plan(t.sentence(), "");
  plan.set_deprel(d, "nmod:desc");
  internal::push(
      out, internal::make_diagnostic(
               t.sentence(), ConstructionKind::kPostNameDescriptor,
               {h, d}, plan.build(),
               "bare nominal '" + t.tok(d).form + "' after '" +
                   t.tok(h).form + "' is a descriptor, not a full-NP appos",
               lexical ? Confidence::kHigh : Confidence::kHeuristic,
               t.tok(d).form));
}

void pronoun_noun(const Tree& t, int p, std::vector<Diagnostic>& out) {
  if (!t.upos_in(p, {"PRON"}) || !t.form_is(p, {"we", "us", "you"})) return;
  int n = p + 1;
  if (!t.has(n) || !t.upos_in(n, {"NOUN"})) return;
  PlanBuilder plan(t.sentence(), "");
  if (t.head(n) == p) {
    if (t.tok(n).deprel == "nmod:desc") return;
    std::string_view b = t.base(n);
    if (b != "flat" && b != "appos" && b != "compound" && b != "nmod" &&
        b != "dep" && b != "det")
      return;
    plan.set_deprel(n, "nmod:desc");
  } else if (t.head(p) == n) {
    plan.attach(p, t.head(n), t.tok(n).deprel);
    plan.attach(n, p, "nmod:desc");
  } else {
    return;
  }
  internal::push(
      out, internal::make_diagnostic(
               t.sentence(), ConstructionKind::kPronounNoun, {p, n},
               plan.build(),
               "'" + t.tok(n).form + "' describes the pronoun '" +
                   t.tok(p).form + "' and should be its nmod:desc",
               Confidence::kHigh, t.tok(n).form));
}

bool full_np(const Tree& t, int d) {
  if (t.upos_in(d, {"PROPN", "PRON"})) return true;
  if (!t.upos_in(d, {"NOUN"})) return false;
  if (t.plural(d) || !bare(t, d)) return true;
  for (int k : t.kids(d))
    if (t.punct(k) && (t.tok(k).form == "\"" || t.tok(k).form == "``" ||
                       t.tok(k).form == "''" || t.tok(k).form == "“"))
      return true;
  return false;
}

}  // namespace

std::vector<Diagnostic> detect_descriptors(const Sentence& sent,
                                           const RuleConfig& cfg) {
  Tree t(sent);
  std::vector<Diagnostic> out;
  for (int id = 1; id <= t.size(); ++id) {
    flat_descriptor(t, cfg, id, out);
    attached_descriptor(t, cfg, id, out);
    post_name(t, cfg, id, out);
    pronoun_noun(t, id, out);
  }
  return out;
}

std::vector<Diagnostic> check_appos(const Sentence& sent,
                                    const RuleConfig& cfg) {
  Tree t(sent);
  std::vector<Diagnostic> out;
  for (int d = 1; d <= t.size(); ++d) {
    if (!t.rel_is(d, "appos")) continue;
    int h = t.head(d);
    if (h == 0) continue;
    auto dislocate = [&](const std::string& why) {
      PlanBuilder plan(sent, "");
      plan.set_deprel(d, "dislocated");
      internal::push(out, internal::make_diagnostic(
                              sent, ConstructionKind::kApposViolation, {h, d},
                              plan.build(),
                              "appos '" + t.tok(d).form + "' " + why +
                                  "; relabel as dislocated",
                              Confidence::kHigh, t.tok(d).form));
    };
    if (d < h) {
      dislocate("attaches leftward");
      continue;
    }
    std::vector<int> dep_span = t.subtree(d);
    int dmin = dep_span.front();
    int last = h;
    for (int i : t.subtree(h))
      if (i < dmin && !std::binary_search(dep_span.begin(), dep_span.end(), i))
        last = std::max(last, i);
    bool intervenes = false;
    for (int i = last + 1; i < dmin; ++i) intervenes |= !t.punct(i);
    if (intervenes) {
      dislocate("is separated from '" + t.tok(h).form + "' by other words");
      continue;
    }
    if (t.upos_in(d, {"NUM"})) continue;
    if (t.in(cfg.lexicons.locales, d)) continue;
    if (post_name_candidate(t, d)) continue;
    if (full_np(t, d)) continue;
    internal::push(out, internal::make_diagnostic(
                            sent, ConstructionKind::kApposViolation, {h, d},
                            std::nullopt,
                            "appos '" + t.tok(d).form +
                                "' may not be a full noun phrase",
                            Confidence::kHeuristic, t.tok(d).form));
  }
  return out;
}

}  // namespace mischief
