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

// Helpers shared by the rule families.

#ifndef MISCHIEF_SRC_RULES_INTERNAL_H_
#define MISCHIEF_SRC_RULES_INTERNAL_H_

#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mischief/rules.h"

namespace mischief::internal {

// Tree queries over one sentence with cached child lists.
class Tree {
 public:
  explicit Tree(const Sentence& sent);

  const Sentence& sentence() const { return sent_; }
  int size() const { return sent_.size(); }
  bool has(int id) const { return sent_.has(id); }
  const Token& tok(int id) const { return sent_.tokens[id - 1]; }
  int head(int id) const { return tok(id).head; }
  const std::vector<int>& kids(int id) const { return kids_[id]; }

  std::string_view base(int id) const;
  std::string_view subtype(int id) const;
  bool rel_is(int id, std::string_view base) const { return this->base(id) == base; }
  // First child of `id` whose base relation is `base`, or 0.
  int child_with(int id, std::string_view base) const;
  bool dominates(int ancestor, int id) const {
    return sent_.dominates(ancestor, id);
  }
  std::vector<int> subtree(int id) const;
  // With skip_punct, leading punctuation of the subtree is ignored.
  int subtree_min(int id, bool skip_punct = false) const;
  int subtree_max(int id) const;

  bool upos_in(int id, std::initializer_list<std::string_view> tags) const;
  bool nominal(int id) const { return upos_in(id, {"NOUN", "PROPN"}); }
  bool punct(int id) const { return tok(id).upos == "PUNCT"; }
  bool plural(int id) const;
  bool capitalized(int id) const;
  std::string lower(int id) const;
  // Form or lemma in the lexicon, case-insensitively.
  bool in(const Lexicon& lex, int id) const;
  bool form_is(int id, std::initializer_list<std::string_view> forms) const;

 private:
  const Sentence& sent_;
  std::vector<std::vector<int>> kids_;
};

bool is_digit_string(std::string_view s);
bool is_dash(std::string_view form);
bool is_comma(std::string_view form);
// "221b", "11", "4a": starts with a digit, letters or digits only.
bool house_number_shape(std::string_view form);
// "58.0", "2.1.3".
bool version_shape(std::string_view form);
// "II" .. "XX".
bool roman_numeral(std::string_view form);
bool participle(const Tree& t, int id);

// Head of the flat group containing `id`.
int name_head(const Tree& t, int id);

// Age, edition or party-letter shapes set off after a name.
bool parenthetical_shape(const Tree& t, int id);

// Digit groups and separators of a phone number containing `id`, or empty.
std::vector<int> phone_span(const Tree& t, int id);

// Comma-separated address or contact block: segment token lists, the first
// being the block head's segment. Empty when the sentence is not a block.
std::vector<std::vector<int>> address_block(const Tree& t, const Lexicons& lex);

using Internal = std::map<int, std::pair<int, std::string>>;

// Makes `top` the head of `span`: it takes over the attachment of the one
// span token headed from outside, and every token in `internal` gets the
// given (head, deprel). Outside dependents of the old top move to `top`
// unless `keep` holds for them. Returns false if the span has more than one
// externally attached token.
bool reroot(PlanBuilder& plan, const Tree& t, const std::vector<int>& span,
            int top, const Internal& internal,
            const std::function<bool(int)>& keep = nullptr);

// Builds a diagnostic for the rule owning `kind`. The plan is checked by
// applying it; an unusable plan is dropped and the finding downgraded to
// Heuristic. Returns nullopt when a given plan would change nothing; pass
// nullopt for a finding that only flags.
std::optional<Diagnostic> make_diagnostic(const Sentence& sent,
                                          ConstructionKind kind,
                                          std::vector<int> span,
                                          std::optional<EditPlan> plan,
                                          std::string message,
                                          Confidence confidence,
                                          std::string key);

inline void push(std::vector<Diagnostic>& out, std::optional<Diagnostic> d) {
  if (d) out.push_back(std::move(*d));
}

void sort_by_position(std::vector<Diagnostic>& diags);

// Label for an adverbial nominal with the configured subtype name.
std::string adverbial(const RuleConfig& cfg, std::string_view base);

// Relation chosen for an identifier attached to an entity type or name.
std::string numbered_relation(const RuleConfig& cfg, bool name_version);

}  // namespace mischief::internal

#endif  // MISCHIEF_SRC_RULES_INTERNAL_H_
