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

// CoNLL-U object model: tokens, sentences, documents, and the tree
// primitives every rule is built on.

#ifndef MISCHIEF_CONLLU_H_
#define MISCHIEF_CONLLU_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mischief {

enum class ConlluErrorKind {
  kWrongColumnCount,
  kNonIntegerId,
  kHeadOutOfRange,
  kMultipleRoots,
  kCycleDetected,
  kUnknownId,
  kInvariantViolation,
};

std::string_view to_string(ConlluErrorKind kind);

// Raised by parsing, serialization and tree queries. `line` is 1-based and
// zero when the error does not come from an input line; `sentence` is the
// 0-based sentence index within the document.
class ConlluError : public std::runtime_error {
 public:
  ConlluError(ConlluErrorKind kind, const std::string& message,
              std::size_t line = 0, std::size_t sentence = 0, int token = 0);

  ConlluErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t sentence() const { return sentence_; }
  int token() const { return token_; }

 private:
  ConlluErrorKind kind_;
  std::size_t line_;
  std::size_t sentence_;
  int token_;
};

// A dependency relation split into its universal part and optional subtype,
// e.g. `nmod:desc` -> {"nmod", "desc"}.
struct RelationLabel {
  std::string universal;
  std::string subtype;

  static RelationLabel parse(std::string_view label);
  std::string str() const;

  // True when `universal` is one of the 37 UD v2 base relations and the
  // subtype (if any) is lowercase alphanumeric.
  bool is_well_formed() const;

  friend bool operator==(const RelationLabel&, const RelationLabel&) = default;
};

bool is_universal_relation(std::string_view name);

struct Token {
  int id = 0;
  std::string form;
  std::string lemma = "_";
  std::string upos = "_";
  std::string xpos = "_";
  std::string feats = "_";
  int head = 0;
  std::string deprel = "_";
  std::string deps = "_";
  std::string misc = "_";

  RelationLabel relation() const { return RelationLabel::parse(deprel); }
  std::string_view base_relation() const;

  // Value of a morphological feature, e.g. feature("Number") -> "Plur".
  std::optional<std::string> feature(std::string_view key) const;
  bool is_plural() const;

  friend bool operator==(const Token&, const Token&) = default;
};

// A line that is carried verbatim and re-emitted in front of the token at
// index `anchor` (0-based; anchor == tokens.size() means after the last
// token). Used for multiword-token ranges, empty nodes and comments that
// appear after the first token line.
struct VerbatimLine {
  std::size_t anchor = 0;
  std::string text;

  friend bool operator==(const VerbatimLine&, const VerbatimLine&) = default;
};

class Sentence {
 public:
  std::vector<std::string> comments;
  std::vector<Token> tokens;
  std::vector<VerbatimLine> verbatim_lines;
  // Number of blank lines that followed the sentence in the source text.
  std::size_t blank_lines_after = 1;

  int size() const { return static_cast<int>(tokens.size()); }
  bool empty() const { return tokens.empty(); }
  bool has(int id) const { return id >= 1 && id <= size(); }

  // 1-based access. Throws ConlluError(kUnknownId) when out of range.
  const Token& at(int id) const;
  Token& at(int id);

  // Value of a `# key = value` comment, e.g. comment_value("sent_id").
  std::optional<std::string> comment_value(std::string_view key) const;

  // Ids of the direct dependents of `id` in surface order.
  std::vector<int> children(int id) const;
  // Id of the token attached to 0; 0 if the sentence is empty.
  int root() const;
  bool dominates(int ancestor, int id) const;

  std::string text() const;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct TrailingBlankPolicy {
  std::size_t leading_blank_lines = 0;
  bool final_newline = true;

  friend bool operator==(const TrailingBlankPolicy&,
                         const TrailingBlankPolicy&) = default;
};

struct Document {
  std::vector<Sentence> sentences;
  TrailingBlankPolicy trailing_blank_policy;

  friend bool operator==(const Document&, const Document&) = default;
};

struct ParseWarning {
  std::size_t line = 0;
  std::string message;
};

// Parses CoNLL-U text. Throws ConlluError on malformed input; unknown
// relation labels are reported through `warnings` when it is non-null.
Document parse_conllu(std::string_view text,
                      std::vector<ParseWarning>* warnings = nullptr);

// Throws ConlluError(kInvariantViolation) if any sentence is not a valid
// tree or carries malformed fields.
std::string serialize_conllu(const Document& doc);
std::string serialize_sentence(const Sentence& sent);

// Checks the single-root, in-range and acyclic invariants. Returns the first
// violation, if any.
std::optional<ConlluError> check_tree(const Sentence& sent);
void validate(const Sentence& sent);

// `id` plus all of its transitive dependents, in surface order.
std::vector<int> subtree_span(const Sentence& sent, int id);

// True if no two arcs cross and no arc covers the root.
bool is_projective(const Sentence& sent);

}  // namespace mischief

#endif  // MISCHIEF_CONLLU_H_
