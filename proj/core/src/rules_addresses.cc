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

// Street addresses, locale postmodifiers, phone numbers and address lists.

#include <algorithm>

#include "rules_internal.h"

namespace mischief {

using internal::Internal;
using internal::Tree;

namespace {

void street_address(const Tree& t, const RuleConfig& cfg, int n,
                    std::vector<Diagnostic>& out) {
  const Lexicons& lex = cfg.lexicons;
  if (!internal::house_number_shape(t.tok(n).form)) return;
  int s = 0;
  for (int i = n + 1; i <= std::min(t.size(), n + 4); ++i) {
    if (t.punct(i) || !t.capitalized(i)) return;
    if (i > n + 1 && t.in(lex.street_types, i)) {
      s = i;
      break;
    }
  }
  if (s == 0) return;
  std::vector<int> span;
  for (int i = n; i <= s; ++i) span.push_back(i);
  Internal in;
  int first = n + 1;
  in[first] = {s, "compound"};
  for (int i = first + 1; i < s; ++i) {
    bool propn = t.upos_in(i, {"PROPN"}) && t.upos_in(first, {"PROPN"});
    in[i] = propn ? std::pair<int, std::string>{first, "flat"}
                  : std::pair<int, std::string>{s, "compound"};
  }
  in[n] = {s, internal::numbered_relation(cfg, false)};
  PlanBuilder plan(t.sentence(), "");
  if (!internal::reroot(plan, t, span, s, in)) return;
  internal::push(out, internal::make_diagnostic(
                          t.sentence(), ConstructionKind::kStreetAddress, span,
                          plan.build(),
                          "street type '" + t.tok(s).form +
                              "' heads the address '" + t.tok(n).form + " ... " +
                              t.tok(s).form + "'",
                          Confidence::kHigh, t.tok(s).form));
}

bool locale_punct(std::string_view f) {
  return f == "," || f == ":" || internal::is_dash(f);
}

void locale_postmodifier(const Tree& t, const RuleConfig& cfg, int l,
                         std::vector<Diagnostic>& out) {
  if (!t.capitalized(l) || !t.in(cfg.lexicons.locales, l)) return;
  if (t.subtype(l) == "npmod") return;
  int p = l - 1, x = l - 2;
  if (!t.has(x) || !locale_punct(t.tok(p).form) || !t.nominal(x)) return;
  if (t.dominates(l, x)) return;
  std::vector<int> lsub = t.subtree(l);
  auto ends_at_x = [&](int a) {
    int hi = 0;
    for (int i : t.subtree(a))
      if (i != p && !std::binary_search(lsub.begin(), lsub.end(), i))
        hi = std::max(hi, i);
    return hi == x;
  };
  int a = x;
  while (t.head(a) != 0 && t.nominal(t.head(a)) && ends_at_x(t.head(a)))
    a = t.head(a);
  std::string rel = internal::adverbial(cfg, "nmod");
  PlanBuilder plan(t.sentence(), "");
  plan.attach(l, a, rel);
  plan.attach(p, l, "punct");
  internal::push(out, internal::make_diagnostic(
                          t.sentence(), ConstructionKind::kLocalePostmodifier,
                          {a, p, l}, plan.build(),
                          "locale '" + t.tok(l).form + "' should be " + rel +
                              " of '" + t.tok(a).form + "'",
                          Confidence::kHigh, t.tok(l).form));
}

void phone_number(const Tree& t, int i, std::vector<Diagnostic>& out) {
  std::vector<int> span = internal::phone_span(t, i);
  if (span.empty() || span.front() != i) return;
  Internal in;
  int pending_sep = 0;
  for (int id : span) {
    if (id == i) continue;
    if (!internal::is_digit_string(t.tok(id).form)) {
      pending_sep = id;
      continue;
    }
    in[id] = {i, "flat"};
    if (pending_sep) in[pending_sep] = {id, "punct"};
    pending_sep = 0;
  }
  PlanBuilder plan(t.sentence(), "");
  if (!internal::reroot(plan, t, span, i, in)) return;
  internal::push(out, internal::make_diagnostic(
                          t.sentence(), ConstructionKind::kPhoneNumber, span,
                          plan.build(),
                          "phone number digit groups should form a flat chain "
                          "from '" + t.tok(i).form + "'",
                          Confidence::kHigh, "phone"));
}

void address_list(const Tree& t, const RuleConfig& cfg,
                  std::vector<Diagnostic>& out) {
  auto segs = internal::address_block(t, cfg.lexicons);
  if (segs.empty()) return;
  auto top_of = [&](const std::vector<int>& s) {
    for (int id : s)
      if (t.head(id) < s.front() || t.head(id) > s.back()) return id;
    return 0;
  };
  int first = top_of(segs.front());
  PlanBuilder plan(t.sentence(), "");
  std::vector<int> span;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    int top = top_of(segs[i]);
    if (i > 0) {
      plan.attach(top, first, "list");
      int sep = segs[i].front() - 1;
      plan.attach(sep, top, "punct");
      span.push_back(sep);
    }
    span.insert(span.end(), segs[i].begin(), segs[i].end());
  }
  std::sort(span.begin(), span.end());
  internal::push(out, internal::make_diagnostic(
                          t.sentence(), ConstructionKind::kAddressList, span,
                          plan.build(),
                          "address or contact block: later segments should be "
                          "list dependents of '" + t.tok(first).form + "'",
                          Confidence::kHigh, "address"));
}

}  // namespace

std::vector<Diagnostic> detect_addresses(const Sentence& sent,
                                         const RuleConfig& cfg) {
  Tree t(sent);
  std::vector<Diagnostic> out;
  bool block = !internal::address_block(t, cfg.lexicons).empty();
  for (int id = 1; id <= t.size(); ++id) {
    street_address(t, cfg, id, out);
    if (!block) locale_postmodifier(t, cfg, id, out);
    phone_number(t, id, out);
  }
  address_list(t, cfg, out);
  return out;
}

}  // namespace mischief
