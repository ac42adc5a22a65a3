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

// Hyphenated phrasal attributives and synthetic compounds.

#include <algorithm>

#include "rules_internal.h"

namespace mischief {

using internal::Tree;

namespace {

bool hyphen(const Tree& t, int id) { return t.has(id) && t.tok(id).form == "-"; }

// "computer-generated images", "a fire breathing dragon".
bool synthetic_at(const Tree& t, int p, int* noun, int* hy) {
  if (!internal::participle(t, p)) return false;
  *hy = 0;
  int n = p - 1;
  if (hyphen(t, n)) {
    *hy = n;
    n = p - 2;
  }
  if (!t.has(n) || !t.upos_in(n, {"NOUN"}) || t.head(n) != p) return false;
  *noun = n;
  int h = t.head(p);
  return h > p && t.nominal(h);
}

void synthetic_compound(const Tree& t, int p, std::vector<Diagnostic>& out) {
  int n = 0, hy = 0;
  if (!synthetic_at(t, p, &n, &hy)) return;
  std::string_view b = t.base(n);
  if (t.subtype(n) == "npmod") return;
  if (b != "obj" && b != "obl" && b != "nsubj" && b != "iobj" && b != "nmod" &&
      b != "advmod" && b != "dep" && b != "compound")
    return;
  PlanBuilder plan(t.sentence(), "");
  plan.set_deprel(n, "compound");
  plan.set_deprel(p, "amod");
  if (hy) plan.attach(hy, p, "punct");
  std::vector<int> span = hy ? std::vector<int>{n, hy, p}
                             : std::vector<int>{n, p};
  span.push_back(t.head(p));
  internal::push(out, internal::make_diagnostic(
                          t.sentence(), ConstructionKind::kSyntheticCompound,
                          span, plan.build(),
                          "'" + t.tok(n).form + "' is the incorporated "
                          "argument of the attributive '" + t.tok(p).form +
                              "' and should be compound",
                          Confidence::kHigh, t.lower(p)));
}

void phrasal_attributive(const Tree& t, int start,
                         std::vector<Diagnostic>& out) {
  if (t.punct(start) || hyphen(t, start - 1) || !hyphen(t, start + 1)) return;
  std::vector<int> words = {start};
  std::vector<int> hyphens;
  int i = start;
  while (hyphen(t, i + 1) && t.has(i + 2) && !t.punct(i + 2)) {
    hyphens.push_back(i + 1);
    words.push_back(i + 2);
    i += 2;
  }
  if (words.size() < 2) return;
  // Numeric ranges ("5-10 minutes") belong to the range rule.
  if (std::all_of(words.begin(), words.end(), [&](int w) {
        return internal::is_digit_string(t.tok(w).form);
      }))
    return;
  int h = i + 1;
  if (!t.has(h) || !t.nominal(h)) return;
  int noun = 0, hy = 0;
  if (words.size() == 2 && synthetic_at(t, words[1], &noun, &hy)) return;
  int r = 0;
  for (int w : words) {
    int hd = t.head(w);
    if (hd >= start && hd <= i) continue;
    if (r != 0 || hd != h) return;
    r = w;
  }
  if (r == 0) return;
  for (int y : hyphens)
    if (t.head(y) < start - 1 || t.head(y) > h) return;

  PlanBuilder plan(t.sentence(), "");
  for (int w : words) {
    if (w == r) continue;
    int hd = t.head(w);
    if (t.upos_in(w, {"NUM"}) && t.rel_is(w, "nummod")) {
      plan.set_deprel(w, "compound");
    } else if (t.upos_in(w, {"ADJ"}) &&
               (t.rel_is(w, "amod") || t.rel_is(w, "advmod")) &&
               t.upos_in(hd, {"ADJ"})) {
      plan.set_deprel(w, "compound");
    } else if (t.lower(w) == "so") {
      plan.set_deprel(w, "compound");
    }
  }
  plan.set_deprel(r, t.upos_in(r, {"ADJ"}) || internal::participle(t, r)
                         ? "amod"
                         : "compound");
  for (int y : hyphens) {
    int a = y - 1, b = y + 1;
    int head = plan.head_of(a) == b ? b : plan.head_of(b) == a ? a : b;
    plan.attach(y, head, "punct");
  }
  std::string key;
  std::vector<int> span;
  for (int k = start; k <= i; ++k) {
    key += t.lower(k);
    span.push_back(k);
  }
  span.push_back(h);
  internal::push(out, internal::make_diagnostic(
                          t.sentence(), ConstructionKind::kPhrasalAttributive,
                          span, plan.build(),
                          "hyphenated attributive '" + key +
                              "' modifying '" + t.tok(h).form + "'",
                          Confidence::kHigh, key));
}

}  // namespace

std::vector<Diagnostic> detect_phrasal_attributives(const Sentence& sent,
                                                    const RuleConfig&) {
  Tree t(sent);
  std::vector<Diagnostic> out;
  for (int id = 1; id <= t.size(); ++id) {
    synthetic_compound(t, id, out);
    phrasal_attributive(t, id, out);
  }
  return out;
}

}  // namespace mischief
