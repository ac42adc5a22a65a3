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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.h"

namespace mischief {
namespace {

using testing::sentence_from_spec;

std::vector<Diagnostic> of_kind(const std::vector<Diagnostic>& all,
                                ConstructionKind kind) {
  std::vector<Diagnostic> out;
  for (const Diagnostic& d : all)
    if (d.kind == kind) out.push_back(d);
  return out;
}

// The single finding of `kind`, applied to `s`.
Sentence fix(const Sentence& s, ConstructionKind kind,
             const RuleConfig& cfg = RuleConfig{}) {
  std::vector<Diagnostic> d = of_kind(lint_sentence(s, cfg), kind);
  if (d.size() != 1 || !d[0].proposed) {
    ADD_FAILURE() << "expected one " << to_string(kind) << " plan, got "
                  << d.size();
    return s;
  }
  return apply(*d[0].proposed, s);
}

void expect_clean(const std::string& spec) {
  Sentence s = sentence_from_spec(spec);
  std::vector<Diagnostic> d = lint_sentence(s, RuleConfig{});
  for (const Diagnostic& x : d)
    ADD_FAILURE() << spec << "\n  " << x.rule_id << ": " << x.message;
}

TEST(Registry, OneRulePerKind) {
  std::set<ConstructionKind> kinds;
  std::set<std::string_view> ids;
  for (const RuleInfo& r : rule_registry()) {
    kinds.insert(r.kind);
    ids.insert(r.id);
    EXPECT_EQ(rule_for(r.kind).id, r.id);
  }
  EXPECT_EQ(kinds.size(), static_cast<std::size_t>(kConstructionKindCount));
  EXPECT_EQ(ids.size(), kinds.size());
  for (ConstructionKind k : all_construction_kinds())
    EXPECT_EQ(parse_construction_kind(to_string(k)), k);
  EXPECT_FALSE(parse_construction_kind("Nonsense").has_value());
}

TEST(Plants, EachPlantIsFoundWithItsKind) {
  Document doc = testing::load_fixture("planted/planted.conllu");
  std::vector<testing::Plant> plants = testing::read_plants(doc);
  ASSERT_EQ(plants.size(), static_cast<std::size_t>(kConstructionKindCount));
  for (const testing::Plant& p : plants) {
    const Sentence& s = doc.sentences[p.sentence];
    std::vector<Diagnostic> d = of_kind(lint_sentence(s, RuleConfig{}), p.kind);
    ASSERT_EQ(d.size(), 1u) << to_string(p.kind);
    EXPECT_FALSE(d[0].token_span.empty());
    EXPECT_EQ(d[0].rule_id, rule_for(p.kind).id);
    if (d[0].proposed) {
      Sentence fixed = apply(*d[0].proposed, s);
      EXPECT_FALSE(check_tree(fixed).has_value());
      EXPECT_TRUE(of_kind(lint_sentence(fixed, RuleConfig{}), p.kind).empty())
          << to_string(p.kind);
    }
  }
}

TEST(Descriptors, AppellationBecomesModifier) {
  Document doc = testing::load_fixture("figures/fig1_appellation.conllu");
  Document gold = testing::load_fixture("figures/fig1_appellation.gold.conllu");
  EXPECT_EQ(fix(doc.sentences[0], ConstructionKind::kAppellation),
            gold.sentences[0]);
}

TEST(Descriptors, PronounNoun) {
  Sentence out = fix(
      sentence_from_spec("We|PRON|3|nsubj pilots|NOUN|1|appos|NNS "
                         "deserve|VERB|0|root raises|NOUN|3|obj|NNS"),
      ConstructionKind::kPronounNoun);
  EXPECT_EQ(out.at(2).head, 1);
  EXPECT_EQ(out.at(2).deprel, "nmod:desc");
}

TEST(Descriptors, PlainPersonalNameIsClean) {
  expect_clean("Joe|PROPN|3|nsubj Biden|PROPN|1|flat spoke|VERB|0|root");
}

TEST(Appos, FullNpApposIsClean) {
  expect_clean(
      "Sam|PROPN|6|nsubj ,|PUNCT|4|punct my|PRON|4|nmod:poss "
      "brother|NOUN|1|appos ,|PUNCT|4|punct is|AUX|7|cop tall|ADJ|0|root");
}

TEST(Appos, LeftwardApposIsDislocated) {
  Sentence out = fix(
      sentence_from_spec("A|DET|2|det leader|NOUN|4|appos ,|PUNCT|2|punct "
                         "he|PRON|6|nsubj is|AUX|6|cop intent|ADJ|0|root"),
      ConstructionKind::kApposViolation);
  EXPECT_EQ(out.at(2).deprel, "dislocated");
}

TEST(NameInternal, EntityTypeFirst) {
  Sentence out = fix(
      sentence_from_spec("We|PRON|2|nsubj swam|VERB|0|root in|ADP|4|case "
                         "Lake|PROPN|2|obl Michigan|PROPN|4|flat"),
      ConstructionKind::kEntityTypeFirst);
  EXPECT_EQ(out.at(4).head, 2);
  EXPECT_EQ(out.at(5).head, 4);
  EXPECT_EQ(out.at(5).deprel, "compound");
}

TEST(NameInternal, CardinalDirectionBecomesNounCompound) {
  Sentence out = fix(
      sentence_from_spec("the|DET|3|det north|ADJ|3|amod coast|NOUN|0|root"),
      ConstructionKind::kCardinalDirection);
  EXPECT_EQ(out.at(2).upos, "NOUN");
  EXPECT_EQ(out.at(2).deprel, "compound");
}

TEST(NameInternal, CleanAnalyses) {
  expect_clean("New|ADJ|2|amod York|PROPN|3|compound City|PROPN|0|root");
  expect_clean("Church|PROPN|2|compound Street|PROPN|0|root");
  expect_clean("the|DET|3|det north|NOUN|3|compound coast|NOUN|0|root");
  expect_clean("Lake|PROPN|0|root Michigan|PROPN|1|compound");
}

TEST(Numbered, FigureIdentifierPerConfig) {
  Sentence s = sentence_from_spec(
      "See|VERB|0|root Figure|NOUN|1|obj 4|NUM|2|nummod");
  RuleConfig cfg;
  EXPECT_EQ(fix(s, ConstructionKind::kNumberedEntity, cfg).at(3).deprel,
            "nmod:desc");
  cfg.numbered_entity_relation = NumberedEntityRelation::kNummodName;
  EXPECT_EQ(fix(s, ConstructionKind::kNumberedEntity, cfg).at(3).deprel,
            "nummod:name");
  cfg.numbered_entity_relation = NumberedEntityRelation::kCompoundOrFlat;
  Sentence out = fix(s, ConstructionKind::kNumberedEntity, cfg);
  EXPECT_EQ(out.at(3).deprel, "compound");
  EXPECT_EQ(out.at(3).head, 2);
}

TEST(Numbered, SymphonyFigure) {
  Document doc = testing::load_fixture("figures/symphony_no5.conllu");
  Document gold = testing::load_fixture("figures/symphony_no5.gold.conllu");
  RunResult r = run_rules(doc, RuleConfig{}, RunMode::kRewrite);
  EXPECT_EQ(r.document.sentences[0], gold.sentences[0]);
}

TEST(Numbered, PageRange) {
  Sentence out = fix(
      sentence_from_spec("pp.|NOUN|0|root 5|NUM|1|nummod –|PUNCT|4|punct "
                         "10|NUM|1|nummod"),
      ConstructionKind::kNumericRange);
  EXPECT_EQ(out.at(4).head, 2);
  EXPECT_EQ(out.at(4).deprel, "nmod");
  EXPECT_EQ(out.at(3).head, 4);
  EXPECT_EQ(out.at(2).head, 1);
}

TEST(Numbered, CleanAnalyses) {
  expect_clean("See|VERB|0|root Figure|NOUN|1|obj 4|NUM|2|nmod:desc");
  expect_clean("I|PRON|2|nsubj have|VERB|0|root 3|NUM|4|nummod "
               "items|NOUN|2|obj|NNS");
}

TEST(Suffixes, BusinessSuffixIsAmod) {
  Sentence out = fix(
      sentence_from_spec("Apple|PROPN|3|nsubj Inc.|PROPN|1|flat grew|VERB|0|root"),
      ConstructionKind::kBusinessSuffix);
  EXPECT_EQ(out.at(2).deprel, "amod");
}

TEST(Suffixes, AgeIsParataxis) {
  Sentence out = fix(
      sentence_from_spec("Pierre|PROPN|6|nsubj Vinken|PROPN|1|flat "
                         ",|PUNCT|4|punct 61|NUM|1|appos ,|PUNCT|4|punct "
                         "said|VERB|0|root"),
      ConstructionKind::kParentheticalDescriptor);
  EXPECT_EQ(out.at(4).deprel, "parataxis");
}

TEST(Suffixes, NicknameApposIsClean) {
  expect_clean("Richard|PROPN|4|nsubj the|DET|3|det Lionheart|PROPN|1|appos "
               "ruled|VERB|0|root");
}

TEST(Addresses, LocaleIsAdverbial) {
  Sentence out = fix(
      sentence_from_spec("London|PROPN|0|root ,|PUNCT|3|punct UK|PROPN|1|appos"),
      ConstructionKind::kLocalePostmodifier);
  EXPECT_EQ(out.at(3).deprel, "nmod:adv");
  EXPECT_EQ(out.at(3).head, 1);
}

TEST(Addresses, WisconsinMadison) {
  Document doc = testing::load_fixture("figures/wisconsin_madison.conllu");
  Document gold = testing::load_fixture("figures/wisconsin_madison.gold.conllu");
  RunResult r = run_rules(doc, RuleConfig{}, RunMode::kRewrite);
  EXPECT_EQ(r.document.sentences[0], gold.sentences[0]);
}

TEST(Addresses, PhoneDigitsAreFlat) {
  Sentence out = fix(
      sentence_from_spec("Call|VERB|0|root 202|NUM|1|obj 555|NUM|2|nummod "
                         "0134|NUM|2|nummod"),
      ConstructionKind::kPhoneNumber);
  EXPECT_EQ(out.at(3).deprel, "flat");
  EXPECT_EQ(out.at(4).deprel, "flat");
  EXPECT_EQ(out.at(4).head, 2);
}

TEST(Phrasal, FireBreathingFigure) {
  Document doc = testing::load_fixture("figures/fig2c_fire_breathing.conllu");
  Document gold =
      testing::load_fixture("figures/fig2c_fire_breathing.gold.conllu");
  RunResult r = run_rules(doc, RuleConfig{}, RunMode::kRewrite);
  EXPECT_EQ(r.document.sentences[0], gold.sentences[0]);
}

TEST(Phrasal, MustSeeIsClean) {
  Document doc = testing::load_fixture("figures/fig2a_must_see.conllu");
  EXPECT_TRUE(lint_sentence(doc.sentences[0], RuleConfig{}).empty());
}

TEST(Phrasal, TenYearIsCompoundButTenYearsStaysNummod) {
  Sentence out = fix(
      sentence_from_spec("a|DET|5|det 10|NUM|4|nummod -|PUNCT|4|punct|HYPH "
                         "year|NOUN|5|compound plan|NOUN|0|root"),
      ConstructionKind::kPhrasalAttributive);
  EXPECT_EQ(out.at(2).deprel, "compound");
  expect_clean("10|NUM|2|nummod years|NOUN|0|root|NNS");
}

TEST(Adverbial, RatesAndDistances) {
  Sentence inch = sentence_from_spec(
      "$|SYM|0|root 15|NUM|1|nummod an|DET|4|det inch|NOUN|1|nmod:npmod");
  EXPECT_EQ(fix(inch, ConstructionKind::kRate).at(4).deprel, "nmod:adv");
  Sentence hour = sentence_from_spec(
      "$|SYM|0|root 15|NUM|1|nummod an|DET|4|det hour|NOUN|1|nmod:npmod");
  EXPECT_EQ(fix(hour, ConstructionKind::kRate).at(4).deprel, "nmod:tmod");
  Sentence away = sentence_from_spec(
      "He|PRON|2|nsubj lives|VERB|0|root 10|NUM|4|nummod "
      "miles|NOUN|5|obl:npmod|NNS away|ADV|2|advmod");
  EXPECT_EQ(fix(away, ConstructionKind::kAdverbialNP).at(4).deprel, "obl:adv");
}

TEST(Adverbial, LegacySubtypeName) {
  RuleConfig cfg;
  cfg.adverbial_subtype_name = "npmod";
  Sentence away = sentence_from_spec(
      "He|PRON|2|nsubj lives|VERB|0|root 10|NUM|4|nummod "
      "miles|NOUN|5|obl:tmod|NNS away|ADV|2|advmod");
  EXPECT_EQ(fix(away, ConstructionKind::kAdverbialNP, cfg).at(4).deprel,
            "obl:npmod");
}

TEST(Adverbial, ScheduleYesterday) {
  Sentence out = fix(
      sentence_from_spec("my|PRON|2|nmod:poss schedule|NOUN|0|root "
                         "yesterday|NOUN|2|nmod:npmod"),
      ConstructionKind::kTemporalNP);
  EXPECT_EQ(out.at(3).deprel, "nmod:tmod");
}

TEST(Adverbial, TotalOverNpmod) {
  Document doc = testing::load_fixture("planted/planted.conllu");
  for (const Sentence& s : doc.sentences) {
    RunResult r = run_rules(Document{{s}}, RuleConfig{}, RunMode::kRewrite);
    for (const Token& t : r.document.sentences[0].tokens)
      EXPECT_EQ(t.deprel.find(":npmod"), std::string::npos) << s.text();
  }
}

TEST(Units, ApproximatorIsAdvmod) {
  Sentence out = fix(
      sentence_from_spec("costs|VERB|0|root about|ADP|3|case $|SYM|1|obj "
                         "10|NUM|3|nummod"),
      ConstructionKind::kApproximator);
  EXPECT_EQ(out.at(2).deprel, "advmod");
  EXPECT_EQ(out.at(2).head, 3);
}

TEST(Units, CleanAnalyses) {
  expect_clean("It|PRON|2|nsubj hit|VERB|0|root 110|NUM|4|nummod "
               "F|NOUN|2|obj");
  expect_clean("It|PRON|2|nsubj reached|VERB|0|root 40|NUM|4|nummod "
               "degrees|NOUN|2|obj|NNS Celsius|PROPN|4|compound");
}

TEST(Datetime, FlatTimeIsNotAnEmbellishment) {
  Document doc = testing::load_fixture("figures/time_10pm.conllu");
  std::vector<Diagnostic> d = lint_sentence(doc.sentences[0], RuleConfig{});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].kind, ConstructionKind::kTimeExpression);
}

TEST(RunRules, LintLeavesDocumentUnchanged) {
  Document doc = testing::load_fixture("figures/fig1_appellation.conllu");
  RunResult r = run_rules(doc, RuleConfig{}, RunMode::kLint);
  EXPECT_EQ(serialize_conllu(r.document), serialize_conllu(doc));
  EXPECT_TRUE(r.has_high());
  EXPECT_TRUE(r.edits.empty());
}

TEST(RunRules, RewritePreservesForms) {
  Document doc = testing::load_fixture("planted/planted.conllu");
  RunResult r = run_rules(doc, RuleConfig{}, RunMode::kRewrite);
  ASSERT_EQ(r.document.sentences.size(), doc.sentences.size());
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    const Sentence& a = doc.sentences[i];
    const Sentence& b = r.document.sentences[i];
    ASSERT_EQ(a.size(), b.size());
    for (int id = 1; id <= a.size(); ++id) {
      EXPECT_EQ(a.at(id).form, b.at(id).form);
      EXPECT_EQ(a.at(id).lemma, b.at(id).lemma);
    }
  }
  RunResult again = run_rules(r.document, RuleConfig{}, RunMode::kRewrite);
  EXPECT_TRUE(again.edits.empty());
  EXPECT_FALSE(again.has_high());
}

TEST(RunRules, HeuristicFindingsAreNotApplied) {
  Document doc = testing::load_fixture("review/heuristic_only.conllu");
  RunResult r = run_rules(doc, RuleConfig{}, RunMode::kRewrite);
  EXPECT_TRUE(r.edits.empty());
  ASSERT_FALSE(r.diagnostics.empty());
  for (const Diagnostic& d : r.diagnostics) {
    EXPECT_EQ(d.confidence, Confidence::kHeuristic);
    EXPECT_FALSE(d.applied);
  }
}

TEST(DescribePlan, FieldLevelEdits) {
  Document doc = testing::load_fixture("figures/fig1_appellation.conllu");
  std::vector<Diagnostic> d = lint_sentence(doc.sentences[0], RuleConfig{});
  ASSERT_FALSE(d.empty());
  std::vector<AppliedEdit> e = describe_plan(d[0], doc.sentences[0]);
  ASSERT_FALSE(e.empty());
  for (const AppliedEdit& x : e) {
    EXPECT_EQ(x.form, doc.sentences[0].at(x.token).form);
    EXPECT_TRUE(x.old_head != x.new_head || x.old_deprel != x.new_deprel ||
                x.old_upos != x.new_upos);
  }
}

}  // namespace
}  // namespace mischief
