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

#include "mischief/rules.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "rules_internal.h"
#include "strings.h"

namespace mischief {

namespace {

constexpr std::array<std::string_view, kConstructionKindCount> kKindNames = {
    "Appellation",         "Embellishment",     "PostNameDescriptor",
    "PronounNoun",         "ApposViolation",    "AnalyzableName",
    "CardinalDirection",   "EntityTypeFirst",   "NumberedEntity",
    "NumberWordPremodifier", "NumericRange",    "BusinessSuffix",
    "PersonalSuffix",      "Nickname",          "ParentheticalDescriptor",
    "StreetAddress",       "LocalePostmodifier", "PhoneNumber",
    "AddressList",         "PhrasalAttributive", "SyntheticCompound",
    "AdverbialNP",         "TemporalNP",        "Rate",
    "Approximator",        "UnitExpression",    "SpelledNumber",
    "DateExpression",      "TimeExpression",
};

using K = ConstructionKind;

const std::vector<RuleInfo> kRegistry = {
    {"appellation", K::kAppellation, "descriptor"},
    {"embellishment", K::kEmbellishment, "descriptor"},
    {"post-name-descriptor", K::kPostNameDescriptor, "descriptor"},
    {"pronoun-noun", K::kPronounNoun, "descriptor"},
    {"appos-criteria", K::kApposViolation, "appos"},
    {"analyzable-name", K::kAnalyzableName, "name-internal"},
    {"cardinal-direction", K::kCardinalDirection, "name-internal"},
    {"entity-type-first", K::kEntityTypeFirst, "name-internal"},
    {"numbered-entity", K::kNumberedEntity, "numbered"},
    {"number-word", K::kNumberWordPremodifier, "numbered"},
    {"numeric-range", K::kNumericRange, "numbered"},
    {"business-suffix", K::kBusinessSuffix, "suffix"},
    {"personal-suffix", K::kPersonalSuffix, "suffix"},
    {"nickname", K::kNickname, "suffix"},
    {"parenthetical", K::kParentheticalDescriptor, "suffix"},
    {"street-address", K::kStreetAddress, "address"},
    {"locale-postmodifier", K::kLocalePostmodifier, "address"},
    {"phone-number", K::kPhoneNumber, "address"},
    {"address-list", K::kAddressList, "address"},
    {"synthetic-compound", K::kSyntheticCompound, "phrasal"},
    {"phrasal-attributive", K::kPhrasalAttributive, "phrasal"},
    {"adverbial-np", K::kAdverbialNP, "adverbial"},
    {"temporal-np", K::kTemporalNP, "adverbial"},
    {"rate", K::kRate, "adverbial"},
    {"approximator", K::kApproximator, "units"},
    {"unit-expression", K::kUnitExpression, "units"},
    {"spelled-number", K::kSpelledNumber, "units"},
    {"date", K::kDateExpression, "datetime"},
    {"time", K::kTimeExpression, "datetime"},
};

using Family = std::vector<Diagnostic> (*)(const Sentence&, const RuleConfig&);

constexpr std::array<Family, 10> kFamilies = {
    detect_descriptors,          check_appos,
    detect_name_internal,        detect_numbered_entities,
    detect_suffixes_and_parentheticals, detect_addresses,
    detect_phrasal_attributives, classify_adverbial_np,
    detect_units_and_approximators, detect_datetime,
};

std::size_t rule_rank(ConstructionKind kind) {
  for (std::size_t i = 0; i < kRegistry.size(); ++i)
    if (kRegistry[i].kind == kind) return i;
  return kRegistry.size();
}

std::string analysis_of(const Sentence& sent, const std::vector<int>& span) {
  std::string out;
  for (int id : span) {
    const Token& t = sent.at(id);
    if (!out.empty()) out += ' ';
    out += std::to_string(id) + ":" + t.form + ":" + std::to_string(t.head) +
           ":" + t.deprel;
  }
  return out;
}

bool overlaps(const std::vector<int>& ids, const std::set<int>& touched) {
  for (int id : ids)
    if (touched.count(id)) return true;
  return false;
}

}  // namespace

std::string_view to_string(ConstructionKind kind) {
  return kKindNames[static_cast<std::size_t>(kind)];
}

std::optional<ConstructionKind> parse_construction_kind(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (kKindNames[i] == name) return static_cast<ConstructionKind>(i);
  return std::nullopt;
}

const std::vector<ConstructionKind>& all_construction_kinds() {
  static const std::vector<ConstructionKind> kAll = [] {
    std::vector<ConstructionKind> v;
    for (int i = 0; i < kConstructionKindCount; ++i)
      v.push_back(static_cast<ConstructionKind>(i));
    return v;
  }();
  return kAll;
}

std::string_view to_string(Confidence c) {
  return c == Confidence::kHigh ? "high" : "heuristic";
}

const std::vector<RuleInfo>& rule_registry() { return kRegistry; }

const RuleInfo& rule_for(ConstructionKind kind) {
  return kRegistry[rule_rank(kind)];
}

RuleError::RuleError(const std::string& rule_id, std::size_t sentence_index,
                     const std::string& reason)
    : std::runtime_error("rule " + rule_id + ", sentence " +
                         std::to_string(sentence_index + 1) + ": " + reason),
      rule_id_(rule_id),
      sentence_index_(sentence_index) {}

bool RunResult::has_high() const {
  for (const Diagnostic& d : diagnostics)
    if (d.confidence == Confidence::kHigh) return true;
  return false;
}

std::vector<Diagnostic> lint_sentence(const Sentence& sent,
                                      const RuleConfig& cfg) {
  std::vector<Diagnostic> out;
  for (Family f : kFamilies) {
    std::vector<Diagnostic> part = f(sent, cfg);
    internal::sort_by_position(part);
    for (Diagnostic& d : part) out.push_back(std::move(d));
  }
  return out;
}

std::vector<AppliedEdit> describe_plan(const Diagnostic& diag,
                                       const Sentence& sent) {
  std::vector<AppliedEdit> out;
  if (!diag.proposed) return out;
  Sentence after = sent;
  for (const Edit& e : diag.proposed->edits) {
    int id = edit_target(e);
    if (!after.has(id)) continue;
    Token& t = after.tokens[id - 1];
    if (const auto* h = std::get_if<SetHead>(&e)) t.head = h->head;
    if (const auto* d = std::get_if<SetDeprel>(&e)) t.deprel = d->deprel;
    if (const auto* u = std::get_if<SetUpos>(&e)) t.upos = u->upos;
  }
  for (int id : diag.proposed->targets()) {
    if (!sent.has(id)) continue;
    const Token& before = sent.at(id);
    const Token& now = after.at(id);
    AppliedEdit e;
    e.sentence_index = diag.sentence_index;
    e.rule_id = diag.rule_id;
    e.confidence = diag.confidence;
    e.token = id;
    e.form = before.form;
    e.old_head = before.head;
    e.old_deprel = before.deprel;
    e.old_upos = before.upos;
    e.new_head = now.head;
    e.new_deprel = now.deprel;
    e.new_upos = now.upos;
    out.push_back(std::move(e));
  }
  return out;
}

Sentence rewrite_sentence(const Sentence& sent, const RuleConfig& cfg,
                          std::size_t sentence_index,
                          std::vector<Diagnostic>& applied,
                          std::vector<AppliedEdit>& edits) {
  Sentence cur = sent;
  for (int pass = 0; pass < kMaxRewritePasses; ++pass) {
    std::set<int> touched;
    bool changed = false;
    for (Family f : kFamilies) {
      std::set<std::pair<std::string, std::vector<int>>> skipped;
      while (true) {
        std::vector<Diagnostic> found = f(cur, cfg);
        internal::sort_by_position(found);
        const Diagnostic* pick = nullptr;
        for (const Diagnostic& d : found) {
          if (d.confidence != Confidence::kHigh || !d.proposed ||
              d.proposed->empty())
            continue;
          std::vector<int> targets = d.proposed->targets();
          if (skipped.count({d.rule_id, targets})) continue;
          if (overlaps(targets, touched)) {
            skipped.insert({d.rule_id, targets});
            continue;
          }
          pick = &d;
          break;
        }
        if (!pick) break;
        Diagnostic d = *pick;
        d.sentence_index = sentence_index;
        Sentence next;
        try {
          next = apply(*d.proposed, cur);
        } catch (const EditError& e) {
          throw RuleError(d.rule_id, sentence_index, e.what());
        }
        for (AppliedEdit& e : describe_plan(d, cur)) edits.push_back(std::move(e));
        for (int id : d.proposed->targets()) touched.insert(id);
        d.applied = true;
        applied.push_back(std::move(d));
        cur = std::move(next);
        changed = true;
      }
    }
    if (!changed) break;
  }
  return cur;
}

RunResult run_rules(const Document& doc, const RuleConfig& cfg, RunMode mode) {
  RunResult result;
  result.document = doc;
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    const Sentence& sent = doc.sentences[i];
    if (mode == RunMode::kLint) {
      for (Diagnostic& d : lint_sentence(sent, cfg)) {
        d.sentence_index = i;
        result.diagnostics.push_back(std::move(d));
      }
      continue;
    }
    std::vector<Diagnostic> applied;
    Sentence out = rewrite_sentence(sent, cfg, i, applied, result.edits);
    for (Diagnostic& d : applied) result.diagnostics.push_back(std::move(d));
    for (Diagnostic& d : lint_sentence(out, cfg)) {
      d.sentence_index = i;
      if (d.confidence == Confidence::kHigh) {
        d.confidence = Confidence::kHeuristic;
        d.message += " (left for review after " +
                     std::to_string(kMaxRewritePasses) + " passes)";
      }
      result.diagnostics.push_back(std::move(d));
    }
    result.document.sentences[i] = std::move(out);
  }
  return result;
}

namespace internal {

Tree::Tree(const Sentence& sent) : sent_(sent), kids_(sent.size() + 1) {
  for (const Token& t : sent.tokens)
    if (t.head >= 0 && t.head <= sent.size()) kids_[t.head].push_back(t.id);
}

std::string_view Tree::base(int id) const {
  std::string_view d = tok(id).deprel;
  return d.substr(0, d.find(':'));
}

std::string_view Tree::subtype(int id) const {
  std::string_view d = tok(id).deprel;
  auto c = d.find(':');
  return c == std::string_view::npos ? std::string_view() : d.substr(c + 1);
}

int Tree::child_with(int id, std::string_view b) const {
  for (int k : kids(id))
    if (base(k) == b) return k;
  return 0;
}

std::vector<int> Tree::subtree(int id) const {
  std::vector<int> out;
  std::vector<int> stack = {id};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (int k : kids(x)) stack.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Tree::subtree_min(int id, bool skip_punct) const {
  std::vector<int> s = subtree(id);
  std::size_t i = 0;
  while (skip_punct && i + 1 < s.size() && punct(s[i])) ++i;
  return s[i];
}
int Tree::subtree_max(int id) const { return subtree(id).back(); }

bool Tree::upos_in(int id, std::initializer_list<std::string_view> tags) const {
  for (std::string_view t : tags)
    if (tok(id).upos == t) return true;
  return false;
}

bool Tree::plural(int id) const {
  const Token& t = tok(id);
  return t.is_plural() || t.xpos == "NNS" || t.xpos == "NNPS";
}

bool Tree::capitalized(int id) const {
  const std::string& f = tok(id).form;
  return !f.empty() && std::isupper(static_cast<unsigned char>(f[0]));
}

std::string Tree::lower(int id) const { return fold_case(tok(id).form); }

bool Tree::in(const Lexicon& lex, int id) const {
  return lex.contains_token(tok(id));
}

bool Tree::form_is(int id, std::initializer_list<std::string_view> forms) const {
  std::string l = lower(id);
  for (std::string_view f : forms)
    if (l == f) return true;
  return false;
}

bool is_digit_string(std::string_view s) { return is_digits(s); }

bool is_dash(std::string_view f) {
  return f == "-" || f == "–" || f == "—" || f == "--";
}

bool is_comma(std::string_view f) { return f == ","; }

bool house_number_shape(std::string_view f) {
  if (f.empty() || !std::isdigit(static_cast<unsigned char>(f[0]))) return false;
  for (char c : f)
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  return f.size() <= 6;
}

bool version_shape(std::string_view f) {
  bool dot = false, digit_after_dot = false;
  if (f.empty() || !std::isdigit(static_cast<unsigned char>(f[0]))) return false;
  for (char c : f) {
    if (c == '.') {
      dot = true;
      digit_after_dot = false;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digit_after_dot = true;
    } else {
      return false;
    }
  }
  return dot && digit_after_dot;
}

bool roman_numeral(std::string_view f) {
  static const std::array<std::string_view, 19> kRoman = {
      "II",   "III", "IV", "V",   "VI",   "VII",   "VIII", "IX",  "X",  "XI",
      "XII",  "XIII", "XIV", "XV", "XVI", "XVII", "XVIII", "XIX", "XX"};
  for (std::string_view r : kRoman)
    if (f == r) return true;
  return false;
}

bool participle(const Tree& t, int id) {
  const Token& tok = t.tok(id);
  auto vf = tok.feature("VerbForm");
  if (vf && (*vf == "Part" || *vf == "Ger")) return true;
  if (tok.xpos == "VBG" || tok.xpos == "VBN") return true;
  std::string l = t.lower(id);
  auto ends = [&](std::string_view s) {
    return l.size() > s.size() + 2 && l.compare(l.size() - s.size(), s.size(), s) == 0;
  };
  if (t.upos_in(id, {"VERB", "ADJ"}) && ends("ing")) return true;
  return t.upos_in(id, {"VERB"}) && ends("ed");
}

int name_head(const Tree& t, int id) {
  return t.rel_is(id, "flat") && t.head(id) != 0 ? t.head(id) : id;
}

namespace {

bool ordinal_shape(std::string_view f) {
  if (f.size() < 3 || !std::isdigit(static_cast<unsigned char>(f[0]))) return false;
  std::string_view suffix = f.substr(f.size() - 2);
  if (suffix != "st" && suffix != "nd" && suffix != "rd" && suffix != "th")
    return false;
  return is_digits(f.substr(0, f.size() - 2));
}

}  // namespace

bool parenthetical_shape(const Tree& t, int id) {
  const std::string& f = t.tok(id).form;
  if (t.upos_in(id, {"NUM"}) && is_digits(f) && f.size() <= 3) return true;
  if (t.form_is(id, {"edition", "ed."})) {
    for (int k : t.kids(id))
      if (ordinal_shape(t.tok(k).form)) return true;
  }
  if (f.size() == 1 && std::isupper(static_cast<unsigned char>(f[0])) &&
      t.has(id - 1) && t.has(id + 1) && t.tok(id - 1).form == "(" &&
      t.tok(id + 1).form == ")")
    return true;
  return false;
}

std::vector<int> phone_span(const Tree& t, int id) {
  auto digits = [&](int i) { return t.has(i) && is_digits(t.tok(i).form); };
  for (int i = 1; i <= t.size(); ++i) {
    if (!digits(i)) continue;
    std::vector<int> span = {i};
    std::vector<std::size_t> lengths = {t.tok(i).form.size()};
    int j = i;
    while (true) {
      if (digits(j + 1)) {
        span.push_back(++j);
      } else if (t.has(j + 1) &&
                 (t.tok(j + 1).form == "-" || t.tok(j + 1).form == ".") &&
                 digits(j + 2)) {
        span.push_back(j + 1);
        span.push_back(j + 2);
        j += 2;
      } else {
        break;
      }
      lengths.push_back(t.tok(j).form.size());
    }
    using L = std::vector<std::size_t>;
    bool phone = lengths == L{3, 4} || lengths == L{3, 3, 4} ||
                 lengths == L{1, 3, 3, 4};
    if (phone && id >= span.front() && id <= span.back()) return span;
    i = j;
  }
  return {};
}

bool reroot(PlanBuilder& plan, const Tree& t, const std::vector<int>& span,
            int top, const Internal& internal,
            const std::function<bool(int)>& keep) {
  auto inside = [&](int id) {
    return std::find(span.begin(), span.end(), id) != span.end();
  };
  int old_top = 0;
  for (int id : span) {
    if (inside(t.head(id))) continue;
    if (old_top != 0) return false;
    old_top = id;
  }
  if (old_top == 0) return false;
  if (old_top != top) {
    plan.attach(top, t.head(old_top), t.tok(old_top).deprel);
    for (int k : t.kids(old_top))
      if (!inside(k) && !(keep && keep(k))) plan.set_head(k, top);
  }
  for (const auto& [id, rel] : internal) plan.attach(id, rel.first, rel.second);
  return true;
}

std::vector<std::vector<int>> address_block(const Tree& t,
                                            const Lexicons& lex) {
  int n = t.size();
  while (n > 0 && t.punct(n) && !is_comma(t.tok(n).form)) --n;
  bool anchor = false;
  for (int i = 1; i <= t.size(); ++i) {
    if (t.upos_in(i, {"VERB", "AUX"})) return {};
    if ((t.capitalized(i) && t.in(lex.street_types, i)) ||
        !phone_span(t, i).empty())
      anchor = true;
  }
  if (!anchor) return {};
  std::vector<std::vector<int>> segs(1);
  std::vector<int> separators;
  for (int i = 1; i <= n; ++i) {
    const std::string& f = t.tok(i).form;
    if (t.punct(i) && (f == "," || f == ";")) {
      separators.push_back(i);
      segs.emplace_back();
    } else {
      segs.back().push_back(i);
    }
  }
  for (const auto& s : segs)
    if (s.empty()) return {};
  if (segs.size() < 2) return {};
  for (const auto& s : segs) {
    int tops = 0;
    for (int id : s) {
      int h = t.head(id);
      if (h < s.front() || h > s.back()) ++tops;
    }
    if (tops != 1) return {};
  }
  int root = t.sentence().root();
  if (root < segs.front().front() || root > segs.front().back()) return {};
  return segs;
}

std::optional<Diagnostic> make_diagnostic(const Sentence& sent,
                                          ConstructionKind kind,
                                          std::vector<int> span,
                                          std::optional<EditPlan> plan,
                                          std::string message,
                                          Confidence confidence,
                                          std::string key) {
  std::sort(span.begin(), span.end());
  span.erase(std::unique(span.begin(), span.end()), span.end());
  const RuleInfo& rule = rule_for(kind);
  if (plan) {
    plan->provenance = std::string(rule.id);
    if (plan->empty()) return std::nullopt;
    try {
      apply(*plan, sent);
    } catch (const EditError& e) {
      plan.reset();
      confidence = Confidence::kHeuristic;
      message += " (no valid rewrite: " + std::string(e.what()) + ")";
    }
  }
  Diagnostic d;
  d.rule_id = std::string(rule.id);
  d.kind = kind;
  d.token_span = std::move(span);
  d.current_analysis = analysis_of(sent, d.token_span);
  d.proposed = std::move(plan);
  d.message = std::move(message);
  d.confidence = confidence;
  d.key = std::move(key);
  return d;
}

void sort_by_position(std::vector<Diagnostic>& diags) {
  std::stable_sort(diags.begin(), diags.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     std::size_t ra = rule_rank(a.kind), rb = rule_rank(b.kind);
                     if (ra != rb) return ra < rb;
                     return a.leftmost() < b.leftmost();
                   });
}

std::string adverbial(const RuleConfig& cfg, std::string_view base) {
  return cfg.adverbial_label(base);
}

std::string numbered_relation(const RuleConfig& cfg, bool name_version) {
  switch (cfg.numbered_entity_relation) {
    case NumberedEntityRelation::kNmodDesc: return "nmod:desc";
    case NumberedEntityRelation::kNummodName: return "nummod:name";
    case NumberedEntityRelation::kCompoundOrFlat:
      return name_version ? "flat" : "compound";
  }
  return "nmod:desc";
}

}  // namespace internal

}  // namespace mischief
