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

// Detectors and rewriters for mischievous nominal constructions.

#ifndef MISCHIEF_RULES_H_
#define MISCHIEF_RULES_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mischief/config.h"
#include "mischief/conllu.h"
#include "mischief/pattern.h"

namespace mischief {

enum class ConstructionKind {
  kAppellation,
  kEmbellishment,
  kPostNameDescriptor,
  kPronounNoun,
  kApposViolation,
  kAnalyzableName,
  kCardinalDirection,
  kEntityTypeFirst,
  kNumberedEntity,
  kNumberWordPremodifier,
  kNumericRange,
  kBusinessSuffix,
  kPersonalSuffix,
  kNickname,
  kParentheticalDescriptor,
  kStreetAddress,
  kLocalePostmodifier,
  kPhoneNumber,
  kAddressList,
  kPhrasalAttributive,
  kSyntheticCompound,
  kAdverbialNP,
  kTemporalNP,
  kRate,
  kApproximator,
  kUnitExpression,
  kSpelledNumber,
  kDateExpression,
  kTimeExpression,
};

inline constexpr int kConstructionKindCount = 29;

std::string_view to_string(ConstructionKind kind);
std::optional<ConstructionKind> parse_construction_kind(std::string_view name);
// All kinds in declaration order.
const std::vector<ConstructionKind>& all_construction_kinds();

enum class Confidence { kHigh, kHeuristic };
std::string_view to_string(Confidence c);

struct Diagnostic {
  std::string rule_id;
  ConstructionKind kind = ConstructionKind::kAppellation;
  std::size_t sentence_index = 0;
  std::vector<int> token_span;   // sorted ids
  std::string current_analysis;  // "form:head:deprel" per span token
  std::optional<EditPlan> proposed;
  std::string message;
  Confidence confidence = Confidence::kHigh;
  // Lexical key for frequency counts, e.g. the title word.
  std::string key;
  bool applied = false;

  int leftmost() const { return token_span.empty() ? 0 : token_span.front(); }
};

struct RuleInfo {
  std::string_view id;
  ConstructionKind kind;
  std::string_view family;
};

// One rule per construction kind, in registry priority order.
const std::vector<RuleInfo>& rule_registry();
const RuleInfo& rule_for(ConstructionKind kind);

// Rule families. Each returns diagnostics for one sentence, ordered by
// leftmost token; sentence_index is left at 0.
std::vector<Diagnostic> detect_descriptors(const Sentence& sent,
                                           const RuleConfig& cfg);
std::vector<Diagnostic> check_appos(const Sentence& sent, const RuleConfig& cfg);
std::vector<Diagnostic> detect_name_internal(const Sentence& sent,
                                             const RuleConfig& cfg);
std::vector<Diagnostic> detect_numbered_entities(const Sentence& sent,
                                                 const RuleConfig& cfg);
std::vector<Diagnostic> detect_suffixes_and_parentheticals(
    const Sentence& sent, const RuleConfig& cfg);
std::vector<Diagnostic> detect_addresses(const Sentence& sent,
                                         const RuleConfig& cfg);
std::vector<Diagnostic> detect_phrasal_attributives(const Sentence& sent,
                                                    const RuleConfig& cfg);
std::vector<Diagnostic> classify_adverbial_np(const Sentence& sent,
                                              const RuleConfig& cfg);
std::vector<Diagnostic> detect_units_and_approximators(const Sentence& sent,
                                                       const RuleConfig& cfg);
std::vector<Diagnostic> detect_datetime(const Sentence& sent,
                                        const RuleConfig& cfg);

// All families in priority order on one sentence.
std::vector<Diagnostic> lint_sentence(const Sentence& sent,
                                      const RuleConfig& cfg);

enum class RunMode { kLint, kRewrite };

// One changed field of one token, as recorded in rewrite logs.
struct AppliedEdit {
  std::size_t sentence_index = 0;
  std::string rule_id;
  Confidence confidence = Confidence::kHigh;
  int token = 0;
  std::string form;
  int old_head = 0;
  std::string old_deprel;
  std::string old_upos;
  int new_head = 0;
  std::string new_deprel;
  std::string new_upos;
};

struct RunResult {
  Document document;
  // Lint: every finding. Rewrite: applied findings followed by the
  // findings left for review.
  std::vector<Diagnostic> diagnostics;
  std::vector<AppliedEdit> edits;

  bool has_high() const;
};

class RuleError : public std::runtime_error {
 public:
  RuleError(const std::string& rule_id, std::size_t sentence_index,
            const std::string& reason);
  const std::string& rule_id() const { return rule_id_; }
  std::size_t sentence_index() const { return sentence_index_; }

 private:
  std::string rule_id_;
  std::size_t sentence_index_;
};

// Maximum number of rewrite passes over one sentence.
inline constexpr int kMaxRewritePasses = 3;

RunResult run_rules(const Document& doc, const RuleConfig& cfg, RunMode mode);

// Rewrites one sentence; `edits` and `applied` receive what was done.
Sentence rewrite_sentence(const Sentence& sent, const RuleConfig& cfg,
                          std::size_t sentence_index,
                          std::vector<Diagnostic>& applied,
                          std::vector<AppliedEdit>& edits);

// Field-level view of a plan against the sentence it was built for.
std::vector<AppliedEdit> describe_plan(const Diagnostic& diag,
                                       const Sentence& sent);

}  // namespace mischief

#endif  // MISCHIEF_RULES_H_
