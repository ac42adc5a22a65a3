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

// Dependency-pattern matching and atomic tree editing.

#ifndef MISCHIEF_PATTERN_H_
#define MISCHIEF_PATTERN_H_

#include <functional>
#include <map>
#include <optional>
#include <regex>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mischief/conllu.h"
#include "mischief/lexicon.h"

namespace mischief {

// Matches a deprel. "nmod" matches only the bare label; "nmod:*" matches
// nmod with any subtype or none; "nmod:desc" matches exactly.
struct DeprelMatcher {
  std::string universal;
  std::optional<std::string> subtype;  // nullopt: any subtype

  static DeprelMatcher parse(std::string_view spec);
  bool matches(std::string_view deprel) const;
};

struct NodePredicate {
  std::optional<Lexicon> form_in;
  std::optional<Lexicon> lemma_in;
  std::optional<Lexicon> upos_in;
  std::optional<DeprelMatcher> deprel_is;
  std::optional<std::regex> regex_form;
  std::optional<bool> is_plural;
  // Arbitrary extra test for constraints the fields above cannot express.
  std::function<bool(const Sentence&, const Token&)> where;
  bool case_sensitive = false;

  bool has_constraint() const;
  bool matches(const Sentence& sent, const Token& tok) const;

  static NodePredicate upos(std::initializer_list<std::string_view> tags);
  static NodePredicate deprel(std::string_view spec);
  static NodePredicate forms(Lexicon lex);
  static NodePredicate any();
};

enum class LinearOrder {
  kPrecedes,             // first.id < second.id
  kImmediatelyPrecedes,  // first.id + 1 == second.id
};

class TreePattern {
 public:
  struct Node {
    std::string name;
    NodePredicate predicate;
  };
  struct Edge {
    std::string head;
    std::string dep;
    std::optional<DeprelMatcher> deprel;
  };
  struct Linear {
    std::string first;
    std::string second;
    LinearOrder order;
  };

  TreePattern& node(std::string name, NodePredicate predicate);
  TreePattern& edge(std::string head, std::string dep,
                    std::optional<std::string_view> deprel = std::nullopt);
  TreePattern& precedes(std::string first, std::string second);
  TreePattern& immediately_precedes(std::string first, std::string second);

  // Throws std::invalid_argument if a name is undeclared or duplicated, a
  // predicate is empty, or the pattern graph (edges plus linear constraints)
  // is disconnected.
  void check() const;

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Linear>& linear() const { return linear_; }
  int index_of(std::string_view name) const;

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<Linear> linear_;
};

// Token ids bound to pattern nodes, in pattern node order.
class Binding {
 public:
  Binding(const TreePattern* pattern, std::vector<int> ids)
      : pattern_(pattern), ids_(std::move(ids)) {}

  int operator[](std::string_view name) const;
  const std::vector<int>& ids() const { return ids_; }
  int leftmost() const;

  friend bool operator==(const Binding& a, const Binding& b) {
    return a.ids_ == b.ids_;
  }

 private:
  const TreePattern* pattern_;
  std::vector<int> ids_;
};

// All injective bindings, ordered by leftmost bound id and then by the ids
// in pattern node order. The pattern must outlive the returned bindings.
std::vector<Binding> match(const TreePattern& pattern, const Sentence& sent);

// True if binding `ids` (pattern node order) satisfies every constraint.
bool satisfies(const TreePattern& pattern, const Sentence& sent,
               std::span<const int> ids);

struct SetHead {
  int id;
  int head;
  friend bool operator==(const SetHead&, const SetHead&) = default;
};
struct SetDeprel {
  int id;
  std::string deprel;
  friend bool operator==(const SetDeprel&, const SetDeprel&) = default;
};
struct SetUpos {
  int id;
  std::string upos;
  friend bool operator==(const SetUpos&, const SetUpos&) = default;
};
using Edit = std::variant<SetHead, SetDeprel, SetUpos>;

int edit_target(const Edit& e);
std::string describe(const Edit& e);

struct EditPlan {
  std::vector<Edit> edits;
  std::string provenance;  // rule id

  bool empty() const { return edits.empty(); }
  // Ids whose head or deprel the plan changes.
  std::vector<int> structural_targets() const;
  std::vector<int> targets() const;

  friend bool operator==(const EditPlan&, const EditPlan&) = default;
};

enum class EditErrorKind { kConflictingEdits, kResultInvalid };

class EditError : public std::runtime_error {
 public:
  EditError(EditErrorKind kind, const std::string& reason)
      : std::runtime_error(reason), kind_(kind) {}
  EditErrorKind kind() const { return kind_; }

 private:
  EditErrorKind kind_;
};

// Applies `plan` to a copy of `sent`. Throws EditError without producing a
// partial result.
Sentence apply(const EditPlan& plan, const Sentence& sent);

// Accumulates edits against one sentence; later writes to the same field
// replace earlier ones and fields equal to the current value are dropped.
class PlanBuilder {
 public:
  PlanBuilder(const Sentence& sent, std::string provenance);

  PlanBuilder& attach(int id, int head, std::string_view deprel);
  PlanBuilder& set_head(int id, int head);
  PlanBuilder& set_deprel(int id, std::string_view deprel);
  PlanBuilder& set_upos(int id, std::string_view upos);

  // Rebuilds the structure of `span`. `internal` gives (head, deprel) for
  // every span token except `new_top`, which takes over the span's external
  // attachment. Outside dependents of the old top token move to `new_top`.
  PlanBuilder& restructure(std::span<const int> span, int new_top,
                           const std::map<int, std::pair<int, std::string>>&
                               internal);

  // Head and deprel after the edits recorded so far.
  int head_of(int id) const;
  std::string deprel_of(int id) const;

  EditPlan build() const;

 private:
  struct Pending {
    std::optional<int> head;
    std::optional<std::string> deprel;
    std::optional<std::string> upos;
  };
  const Sentence& sent_;
  std::string provenance_;
  std::map<int, Pending> pending_;
};

}  // namespace mischief

#endif  // MISCHIEF_PATTERN_H_
