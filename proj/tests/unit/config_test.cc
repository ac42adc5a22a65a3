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

#include "mischief/config.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "mischief/lexicon.h"

namespace mischief {
namespace {

std::filesystem::path temp_file(const std::string& name,
                                const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

TEST(Lexicon, CaseHandlingAndComments) {
  Lexicon l = Lexicon::from_text("# titles\nPresident\n\n  Dr.  \n");
  EXPECT_EQ(l.size(), 2u);
  EXPECT_TRUE(l.contains("president"));
  EXPECT_FALSE(l.contains("president", true));
  EXPECT_TRUE(l.contains("Dr."));
  Token t;
  t.form = "Presidents";
  t.lemma = "president";
  EXPECT_TRUE(l.contains_token(t));
}

TEST(Lexicon, LoadMissingFileThrows) {
  EXPECT_THROW(Lexicon::load("/nonexistent/list.txt"), std::runtime_error);
}

TEST(Lexicons, DefaultsCoverEveryName) {
  const Lexicons& d = Lexicons::defaults();
  for (const std::string& name : Lexicons::names()) {
    ASSERT_NE(d.find(name), nullptr) << name;
    EXPECT_FALSE(d.find(name)->empty()) << name;
    EXPECT_FALSE(default_lexicon_text(name).empty()) << name;
  }
  EXPECT_EQ(d.find("nope"), nullptr);
  EXPECT_TRUE(default_lexicon_text("nope").empty());
  EXPECT_TRUE(d.months.contains("July"));
}

TEST(RuleConfig, Defaults) {
  RuleConfig cfg;
  EXPECT_EQ(cfg.numbered_entity_relation, NumberedEntityRelation::kNmodDesc);
  EXPECT_EQ(cfg.adverbial_label("obl"), "obl:adv");
}

TEST(RuleConfig, ParsesKeysAndComments) {
  RuleConfig cfg = RuleConfig::parse(
      "# options\n"
      "numbered_entity_relation = nummod:name  # second option\n"
      "adverbial_subtype_name = npmod\n");
  EXPECT_EQ(cfg.numbered_entity_relation, NumberedEntityRelation::kNummodName);
  EXPECT_EQ(cfg.adverbial_label("nmod"), "nmod:npmod");
  EXPECT_EQ(RuleConfig::parse("numbered_entity_relation = compound/flat")
                .numbered_entity_relation,
            NumberedEntityRelation::kCompoundOrFlat);
}

TEST(RuleConfig, RejectsBadInput) {
  EXPECT_THROW(RuleConfig::parse("colour = red"), std::invalid_argument);
  EXPECT_THROW(RuleConfig::parse("numbered_entity_relation"),
               std::invalid_argument);
  EXPECT_THROW(RuleConfig::parse("numbered_entity_relation = appos"),
               std::invalid_argument);
  EXPECT_THROW(RuleConfig::parse("adverbial_subtype_name = tmod"),
               std::invalid_argument);
  EXPECT_THROW(RuleConfig::parse("lexicon.bogus = x.txt"),
               std::invalid_argument);
  EXPECT_THROW(RuleConfig::load("/nonexistent/mischief.conf"),
               std::runtime_error);
}

TEST(RuleConfig, LexiconOverrideResolvesRelativePath) {
  temp_file("mischief_titles.txt", "Chancellor\n");
  auto conf = temp_file("mischief_test.conf",
                        "lexicon.titles = mischief_titles.txt\n");
  RuleConfig cfg = RuleConfig::load(conf);
  EXPECT_TRUE(cfg.lexicons.titles.contains("chancellor"));
  EXPECT_FALSE(cfg.lexicons.titles.contains("president"));
  EXPECT_EQ(cfg.lexicon_paths.at("titles"),
            conf.parent_path() / "mischief_titles.txt");
}

TEST(RuleConfig, SetLexiconUnknownNameThrows) {
  RuleConfig cfg;
  auto p = temp_file("mischief_words.txt", "x\n");
  EXPECT_THROW(cfg.set_lexicon("bogus", p), std::invalid_argument);
}

TEST(RuleConfig, TextRoundTrip) {
  RuleConfig cfg;
  cfg.numbered_entity_relation = NumberedEntityRelation::kCompoundOrFlat;
  cfg.adverbial_subtype_name = "npmod";
  cfg.set_lexicon("months", temp_file("mischief_months.txt", "Juli\n"));
  RuleConfig back = RuleConfig::parse(cfg.to_text());
  EXPECT_EQ(back.numbered_entity_relation, cfg.numbered_entity_relation);
  EXPECT_EQ(back.adverbial_subtype_name, "npmod");
  EXPECT_EQ(back.lexicon_paths, cfg.lexicon_paths);
  EXPECT_TRUE(back.lexicons.months.contains("Juli"));
  EXPECT_EQ(back.to_text(), cfg.to_text());
}

}  // namespace
}  // namespace mischief
