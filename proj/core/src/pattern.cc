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

#include "mischief/pattern.h"

#include <algorithm>
#include <set>

#include "strings.h"

namespace mischief {

DeprelMatcher DeprelMatcher::parse(std::string_view spec) {
  DeprelMatcher m;
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    m.universal = std::string(spec);
    m.subtype = std::string();
  } else {
    m.universal = std::string(spec.substr(0, colon));
    std::string_view sub = spec.substr(colon + 1);
    if (sub != "*") m.subtype = std::string(sub);
  }
  return m;
}

bool DeprelMatcher::matches(std::string_view deprel) const {
  auto colon = deprel.find(':');
  std::string_view base = deprel.substr(0, colon);
  if (base != universal) return false;
  if (!subtype) return true;
  std::string_view sub =
      colon == std::string_view::npos ? std::string_view() : deprel.substr(colon + 1);
  return sub == *subtype;
}

bool NodePredicate::has_constraint() const {
  return form_in || lemma_in || upos_in || deprel_is || regex_form ||
         is_plural || static_cast<bool>(where);
}

bool NodePredicate::matches(const Sentence& sent, const Token& tok) const {
  if (form_in && !form_in->contains(tok.form, case_sensitive)) return false;
  if (lemma_in && !lemma_in->contains(tok.lemma, case_sensitive)) return false;
  if (upos_in && !upos_in->contains(tok.upos, true)) return false;
  if (deprel_is && !deprel_is->matches(tok.deprel)) return false;
  if (regex_form && !std::regex_match(tok.form, *regex_form)) return false;
  if (is_plural && tok.is_plural() != *is_plural) return false;
  if (where && !where(sent, tok)) return false;
  return true;
}

NodePredicate NodePredicate::upos(std::initializer_list<std::string_view> tags) {
  NodePredicate p;
  p.upos_in = Lexicon(tags);
  return p;
}

NodePredicate NodePredicate::deprel(std::string_view spec) {
  NodePredicate p;
  p.deprel_is = DeprelMatcher::parse(spec);
  return p;
}

NodePredicate NodePredicate::forms(Lexicon lex) {
  NodePredicate p;
  p.form_in = std::move(lex);
  return p;
}

NodePredicate NodePredicate::any() {
  NodePredicate p;
  p.where = [](const Sentence&, const Token&) { return true; };
  return p;
}

TreePattern& TreePattern::node(std::string name, NodePredicate predicate) {
  nodes_.push_back({std::move(name), std::move(predicate)});
  return *this;
}

TreePattern& TreePattern::edge(std::string head, std::string dep,
                               std::optional<std::string_view> deprel) {
  Edge e{std::move(head), std::move(dep), std::nullopt};
  if (deprel) e.deprel = DeprelMatcher::parse(*deprel);
  edges_.push_back(std::move(e));
  return *this;
}

TreePattern& TreePattern::precedes(std::string first, std::string second) {
  linear_.push_back({std::move(first), std::move(second), LinearOrder::kPrecedes});
  return *this;
}

TreePattern& TreePattern::immediately_precedes(std::string first,
                                               std::string second) {
  linear_.push_back(
      {std::move(first), std::move(second), LinearOrder::kImmediatelyPrecedes});
  return *this;
}

int TreePattern::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].name == name) return static_cast<int>(i);
  return -1;
}

void TreePattern::check() const {
  std::set<std::string> seen;
  for (const Node& n : nodes_) {
    if (!seen.insert(n.name).second)
      throw std::invalid_argument("duplicate pattern node '" + n.name + "'");
    if (!n.predicate.has_constraint())
      throw std::invalid_argument("pattern node '" + n.name +
                                  "' has no constraint");
  }
  const int n = static_cast<int>(nodes_.size());
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto unite = [&](const std::string& a, const std::string& b) {
    int ia = index_of(a), ib = index_of(b);
    if (ia < 0 || ib < 0)
      throw std::invalid_argument("pattern refers to undeclared node '" +
                                  (ia < 0 ? a : b) + "'");
    parent[find(ia)] = find(ib);
  };
  for (const Edge& e : edges_) unite(e.head, e.dep);
  for (const Linear& l : linear_) unite(l.first, l.second);
  for (int i = 1; i < n; ++i)
    if (find(i) != find(0))
      throw std::invalid_argument("pattern graph is not connected");
}

int Binding::operator[](std::string_view name) const {
  int i = pattern_->index_of(name);
  if (i < 0)
    throw std::invalid_argument("no pattern node '" + std::string(name) + "'");
  return ids_[i];
}

int Binding::leftmost() const {
  return ids_.empty() ? 0 : *std::min_element(ids_.begin(), ids_.end());
}

namespace {

struct CompiledPattern {
  std::vector<std::pair<int, int>> edge_nodes;
  std::vector<std::pair<int, int>> linear_nodes;
};

CompiledPattern compile(const TreePattern& p) {
  CompiledPattern c;
  for (const auto& e : p.edges())
    c.edge_nodes.emplace_back(p.index_of(e.head), p.index_of(e.dep));
  for (const auto& l : p.linear())
    c.linear_nodes.emplace_back(p.index_of(l.first), p.index_of(l.second));
  return c;
}

// Checks every constraint whose nodes are all among the first `bound`
// entries of `ids`.
bool consistent(const TreePattern& p, const CompiledPattern& c,
                const Sentence& sent, std::span<const int> ids, int bound) {
  for (std::size_t k = 0; k < c.edge_nodes.size(); ++k) {
    auto [h, d] = c.edge_nodes[k];
    if (h >= bound || d >= bound) continue;
    const Token& dep = sent.tokens[ids[d] - 1];
    if (dep.head != ids[h]) return false;
    const auto& m = p.edges()[k].deprel;
    if (m && !m->matches(dep.deprel)) return false;
  }
  for (std::size_t k = 0; k < c.linear_nodes.size(); ++k) {
    auto [a, b] = c.linear_nodes[k];
    if (a >= bound || b >= bound) continue;
    if (p.linear()[k].order == LinearOrder::kPrecedes) {
      if (!(ids[a] < ids[b])) return false;
    } else if (ids[a] + 1 != ids[b]) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool satisfies(const TreePattern& pattern, const Sentence& sent,
               std::span<const int> ids) {
  const int n = static_cast<int>(pattern.nodes().size());
  if (static_cast<int>(ids.size()) != n) return false;
  std::set<int> distinct(ids.begin(), ids.end());
  if (static_cast<int>(distinct.size()) != n) return false;
  for (int i = 0; i < n; ++i) {
    if (!sent.has(ids[i])) return false;
    if (!pattern.nodes()[i].predicate.matches(sent, sent.tokens[ids[i] - 1]))
      return false;
  }
  return consistent(pattern, compile(pattern), sent, ids, n);
}

std::vector<Binding> match(const TreePattern& pattern, const Sentence& sent) {
  pattern.check();
  const int k = static_cast<int>(pattern.nodes().size());
  std::vector<Binding> out;
  if (k == 0 || sent.empty()) return out;

  const CompiledPattern compiled = compile(pattern);
  std::vector<std::vector<int>> candidates(k);
  for (int i = 0; i < k; ++i)
    for (const Token& t : sent.tokens)
      if (pattern.nodes()[i].predicate.matches(sent, t))
        candidates[i].push_back(t.id);

  std::vector<int> ids(k, 0);
  std::vector<char> used(sent.size() + 1, 0);
  std::function<void(int)> extend = [&](int depth) {
    if (depth == k) {
      out.emplace_back(&pattern, ids);
      return;
    }
    for (int id : candidates[depth]) {
      if (used[id]) continue;
      ids[depth] = id;
      if (!consistent(pattern, compiled, sent, ids, depth + 1)) continue;
      used[id] = 1;
      extend(depth + 1);
      used[id] = 0;
    }
    ids[depth] = 0;
  };
  extend(0);

  std::stable_sort(out.begin(), out.end(), [](const Binding& a, const Binding& b) {
    int la = a.leftmost(), lb = b.leftmost();
    if (la != lb) return la < lb;
    return a.ids() < b.ids();
  });
  return out;
}

int edit_target(const Edit& e) {
  return std::visit([](const auto& x) { return x.id; }, e);
}

std::string describe(const Edit& e) {
  struct V {
    std::string operator()(const SetHead& x) const {
      return "head(" + std::to_string(x.id) + ")=" + std::to_string(x.head);
    }
    std::string operator()(const SetDeprel& x) const {
      return "deprel(" + std::to_string(x.id) + ")=" + x.deprel;
    }
    std::string operator()(const SetUpos& x) const {
      return "upos(" + std::to_string(x.id) + ")=" + x.upos;
    }
  };
  return std::visit(V{}, e);
}

std::vector<int> EditPlan::structural_targets() const {
  std::set<int> ids;
  for (const Edit& e : edits)
    if (!std::holds_alternative<SetUpos>(e)) ids.insert(edit_target(e));
  return {ids.begin(), ids.end()};
}

std::vector<int> EditPlan::targets() const {
  std::set<int> ids;
  for (const Edit& e : edits) ids.insert(edit_target(e));
  return {ids.begin(), ids.end()};
}

Sentence apply(const EditPlan& plan, const Sentence& sent) {
  std::set<std::pair<int, std::size_t>> fields;
  for (const Edit& e : plan.edits) {
    int id = edit_target(e);
    if (!sent.has(id))
      throw EditError(EditErrorKind::kResultInvalid,
                      "edit " + describe(e) + " targets unknown id " +
                          std::to_string(id));
    if (!fields.insert({id, e.index()}).second)
      throw EditError(EditErrorKind::kConflictingEdits,
                      "two edits target the same field: " + describe(e));
  }

  Sentence out = sent;
  for (const Edit& e : plan.edits) {
    if (const auto* h = std::get_if<SetHead>(&e)) {
      out.tokens[h->id - 1].head = h->head;
    } else if (const auto* d = std::get_if<SetDeprel>(&e)) {
      if (d->deprel.empty() || d->deprel.find_first_of("\t\n") != std::string::npos)
        throw EditError(EditErrorKind::kResultInvalid, "malformed deprel");
      out.tokens[d->id - 1].deprel = d->deprel;
    } else if (const auto* u = std::get_if<SetUpos>(&e)) {
      if (u->upos.empty() || u->upos.find_first_of("\t\n") != std::string::npos)
        throw EditError(EditErrorKind::kResultInvalid, "malformed upos");
      out.tokens[u->id - 1].upos = u->upos;
    }
  }
  if (auto err = check_tree(out))
    throw EditError(EditErrorKind::kResultInvalid,
                    (plan.provenance.empty() ? "" : plan.provenance + ": ") +
                        err->what());
  return out;
}

PlanBuilder::PlanBuilder(const Sentence& sent, std::string provenance)
    : sent_(sent), provenance_(std::move(provenance)) {}

PlanBuilder& PlanBuilder::attach(int id, int head, std::string_view deprel) {
  set_head(id, head);
  return set_deprel(id, deprel);
}

PlanBuilder& PlanBuilder::set_head(int id, int head) {
  pending_[id].head = head;
  return *this;
}

PlanBuilder& PlanBuilder::set_deprel(int id, std::string_view deprel) {
  pending_[id].deprel = std::string(deprel);
  return *this;
}

PlanBuilder& PlanBuilder::set_upos(int id, std::string_view upos) {
  pending_[id].upos = std::string(upos);
  return *this;
}

int PlanBuilder::head_of(int id) const {
  auto it = pending_.find(id);
  if (it != pending_.end() && it->second.head) return *it->second.head;
  return sent_.at(id).head;
}

std::string PlanBuilder::deprel_of(int id) const {
  auto it = pending_.find(id);
  if (it != pending_.end() && it->second.deprel) return *it->second.deprel;
  return sent_.at(id).deprel;
}

PlanBuilder& PlanBuilder::restructure(
    std::span<const int> span, int new_top,
    const std::map<int, std::pair<int, std::string>>& internal) {
  std::set<int> members(span.begin(), span.end());
  // The old top is the span token attached outside the span, preferring
  // non-punctuation and then the shallowest token.
  int old_top = 0;
  int best_depth = 1 << 30;
  bool best_punct = true;
  for (int id : span) {
    int h = head_of(id);
    if (members.count(h)) continue;
    int depth = 0;
    for (int cur = id; cur != 0 && depth <= sent_.size(); cur = head_of(cur))
      ++depth;
    bool punct = sent_.at(id).upos == "PUNCT";
    if (old_top == 0 || (best_punct && !punct) ||
        (punct == best_punct && depth < best_depth)) {
      old_top = id;
      best_depth = depth;
      best_punct = punct;
    }
  }
  if (old_top == 0)
    throw std::invalid_argument("restructure: span has no external attachment");

  const int ext_head = head_of(old_top);
  const std::string ext_deprel = deprel_of(old_top);
  if (old_top != new_top) {
    for (const Token& t : sent_.tokens)
      if (!members.count(t.id) && head_of(t.id) == old_top)
        set_head(t.id, new_top);
  }
  for (int id : span) {
    if (id == new_top) continue;
    auto it = internal.find(id);
    if (it == internal.end())
      throw std::invalid_argument("restructure: no attachment for token " +
                                  std::to_string(id));
    attach(id, it->second.first, it->second.second);
  }
  attach(new_top, ext_head, ext_deprel);
  return *this;
}

EditPlan PlanBuilder::build() const {
  EditPlan plan;
  plan.provenance = provenance_;
  for (const auto& [id, p] : pending_) {
    const Token& t = sent_.at(id);
    if (p.head && *p.head != t.head) plan.edits.push_back(SetHead{id, *p.head});
    if (p.deprel && *p.deprel != t.deprel)
      plan.edits.push_back(SetDeprel{id, *p.deprel});
    if (p.upos && *p.upos != t.upos) plan.edits.push_back(SetUpos{id, *p.upos});
  }
  return plan;
}

}  // namespace mischief
