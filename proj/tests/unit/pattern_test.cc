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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.h"

namespace mischief {
namespace {

using testing::sentence_from_spec;

Sentence flat_clinton() {
  return sentence_from_spec(
      "Secretary|PROPN|0|root of|ADP|1|flat State|PROPN|1|flat "
      "Clinton|PROPN|1|flat");
}

TEST(DeprelMatcher, SubtypeSemantics) {
  EXPECT_TRUE(DeprelMatcher::parse("nmod").matches("nmod"));
  EXPECT_FALSE(DeprelMatcher::parse("nmod").matches("nmod:desc"));
  EXPECT_TRUE(DeprelMatcher::parse("nmod:*").matches("nmod:desc"));
  EXPECT_TRUE(DeprelMatcher::parse("nmod:*").matches("nmod"));
  EXPECT_FALSE(DeprelMatcher::parse("nmod:*").matches("obl"));
  EXPECT_TRUE(DeprelMatcher::parse("nmod:desc").matches("nmod:desc"));
  EXPECT_FALSE(DeprelMatcher::parse("nmod:desc").matches("nmod:poss"));
}

TEST(TreePattern, CheckRejectsBadPatterns) {
  TreePattern undeclared;
  undeclared.node("a", NodePredicate::any()).edge("a", "b");
  EXPECT_THROW(undeclared.check(), std::invalid_argument);

  TreePattern duplicate;
  duplicate.node("a", NodePredicate::any()).node("a", NodePredicate::any());
  EXPECT_THROW(duplicate.check(), std::invalid_argument);

  TreePattern disconnected;
  disconnected.node("a", NodePredicate::any()).node("b", NodePredicate::any());
  EXPECT_THROW(disconnected.check(), std::invalid_argument);

  TreePattern empty_predicate;
  empty_predicate.node("a", NodePredicate{});
  EXPECT_THROW(empty_predicate.check(), std::invalid_argument);
}

TEST(Match, FlatEdgesOfAppellation) {
  TreePattern p;
  p.node("head", NodePredicate::upos({"PROPN"}))
      .node("dep", NodePredicate::deprel("flat"))
      .edge("head", "dep");
  std::vector<Binding> got = match(p, flat_clinton());
  ASSERT_EQ(got.size(), 3u);
  EXPECT_EQ(got[0]["dep"], 2);
  EXPECT_EQ(got[1]["dep"], 3);
  EXPECT_EQ(got[2]["dep"], 4);
  for (const Binding& b : got) EXPECT_EQ(b["head"], 1);
}

TEST(Match, EmptySentence) {
  TreePattern p;
  p.node("a", NodePredicate::any());
  EXPECT_TRUE(match(p, Sentence{}).empty());
}

TEST(Match, LinearConstraints) {
  TreePattern p;
  p.node("a", NodePredicate::upos({"PROPN"}))
      .node("b", NodePredicate::upos({"PROPN"}))
      .immediately_precedes("a", "b");
  std::vector<Binding> got = match(p, flat_clinton());
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0]["a"], 3);
  EXPECT_EQ(got[0]["b"], 4);
}

TEST(Match, LexiconAndRegexPredicates) {
  NodePredicate title = NodePredicate::forms(Lexicon{"secretary"});
  Sentence s = flat_clinton();
  EXPECT_TRUE(title.matches(s, s.at(1)));
  title.case_sensitive = true;
  EXPECT_FALSE(title.matches(s, s.at(1)));

  NodePredicate re;
  re.regex_form = std::regex("^[A-Z][a-z]+$");
  EXPECT_TRUE(re.matches(s, s.at(4)));
  EXPECT_FALSE(re.matches(s, s.at(2)));
}

// Every injective assignment, filtered by satisfies(): the reference matcher.
std::vector<std::vector<int>> brute_force(const TreePattern& p,
                                          const Sentence& s) {
  std::vector<std::vector<int>> out;
  const int k = static_cast<int>(p.nodes().size());
  std::vector<int> ids(k, 1);
  if (s.size() < k) return out;
  while (true) {
    std::set<int> distinct(ids.begin(), ids.end());
    if (static_cast<int>(distinct.size()) == k && satisfies(p, s, ids))
      out.push_back(ids);
    int i = k - 1;
    while (i >= 0 && ids[i] == s.size()) ids[i--] = 1;
    if (i < 0) break;
    ++ids[i];
  }
  return out;
}

TEST(Match, AgreesWithBruteForceOnRandomSentences) {
  std::mt19937_64 rng(5);
  std::vector<TreePattern> patterns(3);
  patterns[0]
      .node("h", NodePredicate::upos({"NOUN", "PROPN"}))
      .node("d", NodePredicate::any())
      .edge("h", "d");
  patterns[1]
      .node("h", NodePredicate::any())
      .node("a", NodePredicate::deprel("flat"))
      .node("b", NodePredicate::any())
      .edge("h", "a", "flat")
      .edge("h", "b")
      .precedes("a", "b");
  patterns[2]
      .node("x", NodePredicate::upos({"NUM"}))
      .node("y", NodePredicate::any())
      .immediately_precedes("x", "y");
  for (int i = 0; i < 200; ++i) {
    Document doc = parse_conllu(testing::random_document(rng));
    for (const Sentence& s : doc.sentences) {
      for (const TreePattern& p : patterns) {
        std::vector<std::vector<int>> want = brute_force(p, s);
        std::vector<std::vector<int>> got;
        for (const Binding& b : match(p, s)) got.push_back(b.ids());
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, want);
      }
    }
  }
}

TEST(Apply, FlatToModifierStructure) {
  EditPlan plan{{SetHead{1, 4}, SetDeprel{1, "nmod:desc"}, SetHead{3, 1},
                 SetDeprel{3, "nmod"}, SetHead{2, 3}, SetDeprel{2, "case"},
                 SetHead{4, 0}, SetDeprel{4, "root"}},
                "test"};
  Sentence out = apply(plan, flat_clinton());
  EXPECT_EQ(out.root(), 4);
  EXPECT_EQ(out.at(1).head, 4);
  EXPECT_EQ(out.at(1).deprel, "nmod:desc");
  EXPECT_EQ(out.at(2).head, 3);
  EXPECT_EQ(out.at(2).deprel, "case");
  EXPECT_EQ(out.at(3).head, 1);
  EXPECT_EQ(out.at(3).deprel, "nmod");
}

TEST(Apply, EmptyPlanIsIdentity) {
  Sentence s = flat_clinton();
  EXPECT_EQ(apply(EditPlan{}, s), s);
}

TEST(Apply, CycleIsResultInvalid) {
  EditPlan plan{{SetHead{1, 2}}, "test"};
  try {
    apply(plan, flat_clinton());
    FAIL();
  } catch (const EditError& e) {
    EXPECT_EQ(e.kind(), EditErrorKind::kResultInvalid);
  }
}

TEST(Apply, ConflictingEdits) {
  EditPlan plan{{SetDeprel{2, "case"}, SetDeprel{2, "mark"}}, "test"};
  try {
    apply(plan, flat_clinton());
    FAIL();
  } catch (const EditError& e) {
    EXPECT_EQ(e.kind(), EditErrorKind::kConflictingEdits);
  }
}

TEST(PlanBuilder, DropsNoOpsAndKeepsLastWrite) {
  Sentence s = flat_clinton();
  PlanBuilder b(s, "r");
  b.set_deprel(2, "flat");
  b.set_head(3, 1);
  EXPECT_TRUE(b.build().empty());
  b.set_deprel(2, "case").set_deprel(2, "dep");
  EditPlan plan = b.build();
  ASSERT_EQ(plan.edits.size(), 1u);
  EXPECT_EQ(plan.edits[0], Edit(SetDeprel{2, "dep"}));
  EXPECT_EQ(plan.provenance, "r");
  EXPECT_EQ(b.deprel_of(2), "dep");
  EXPECT_EQ(b.head_of(2), 1);
}

TEST(PlanBuilder, RestructureMovesExternalAttachment) {
  Sentence s = sentence_from_spec(
      "Lake|PROPN|3|nsubj Michigan|PROPN|1|flat froze|VERB|0|root");
  PlanBuilder b(s, "r");
  std::vector<int> span = {1, 2};
  b.restructure(span, 2, {{1, {2, "compound"}}});
  Sentence out = apply(b.build(), s);
  EXPECT_EQ(out.at(2).head, 3);
  EXPECT_EQ(out.at(2).deprel, "nsubj");
  EXPECT_EQ(out.at(1).head, 2);
  EXPECT_EQ(out.at(1).deprel, "compound");
}

TEST(EditPlan, Targets) {
  EditPlan plan{{SetHead{3, 1}, SetUpos{4, "NOUN"}, SetDeprel{2, "case"}}, ""};
  EXPECT_EQ(plan.structural_targets(), (std::vector<int>{2, 3}));
  EXPECT_EQ(plan.targets(), (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(edit_target(plan.edits[1]), 4);
  EXPECT_FALSE(describe(plan.edits[0]).empty());
}

}  // namespace
}  // namespace mischief
