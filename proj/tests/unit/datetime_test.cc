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

#include "mischief/datetime.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "mischief/rules.h"

namespace mischief {
namespace {

using testing::sentence_from_spec;

const Lexicons& lex() { return Lexicons::defaults(); }

TEST(DatetimeFragment, FullDate) {
  Sentence s = datetime_fragment({"July", "31", ",", "1980", "AD"}, lex());
  EXPECT_EQ(s.root(), 2);
  EXPECT_EQ(s.at(1).head, 2);
  EXPECT_EQ(s.at(1).deprel, "nmod:tmod");
  EXPECT_EQ(s.at(3).head, 4);
  EXPECT_EQ(s.at(3).deprel, "punct");
  EXPECT_EQ(s.at(4).head, 2);
  EXPECT_EQ(s.at(4).deprel, "nmod:tmod");
  EXPECT_EQ(s.at(5).head, 4);
  EXPECT_EQ(s.at(5).deprel, "nmod:tmod");
}

TEST(DatetimeFragment, LeadingWeekdayTakesAppos) {
  Sentence s = datetime_fragment({"Wednesday", ",", "July", "31"}, lex());
  EXPECT_EQ(s.root(), 1);
  EXPECT_EQ(s.at(4).head, 1);
  EXPECT_EQ(s.at(4).deprel, "appos");
  EXPECT_EQ(s.at(3).head, 4);
  EXPECT_EQ(s.at(2).head, 4);
  EXPECT_EQ(s.at(2).deprel, "punct");
}

TEST(DatetimeFragment, ClockTime) {
  Sentence s = datetime_fragment({"10:00", "pm", "UTC"}, lex());
  EXPECT_EQ(s.root(), 1);
  EXPECT_EQ(s.at(2).deprel, "nmod:tmod");
  EXPECT_EQ(s.at(3).deprel, "nmod:tmod");
}

TEST(DatetimeFragment, OclockIsAdverb) {
  Sentence s = datetime_fragment({"ten", "o'clock"}, lex());
  EXPECT_EQ(s.root(), 1);
  EXPECT_EQ(s.at(2).deprel, "advmod");
  EXPECT_EQ(s.at(2).upos, "ADV");
}

TEST(DatetimeFragment, Errors) {
  EXPECT_THROW(datetime_fragment({}, lex()), DateError);
  EXPECT_THROW(datetime_fragment({"banana", "split"}, lex()), DateError);
  EXPECT_NO_THROW(datetime_fragment({"July"}, lex()));
}

TEST(BuildDateTree, RequiresDatePart) {
  Sentence s = sentence_from_spec("ran|VERB|0|root");
  EXPECT_THROW(build_date_tree(DateParts{}, s), DateError);
  EXPECT_THROW(build_time_tree(DateParts{}, s), DateError);
}

TEST(BuildDateTree, MonthYearWithoutDayIsRejected) {
  Sentence s = sentence_from_spec("July|PROPN|0|root 1980|NUM|1|flat");
  DateParts p;
  p.month = 1;
  p.year = 2;
  EXPECT_THROW(build_date_tree(p, s), std::invalid_argument);
}

TEST(BuildDateTree, HeadTakesExternalAttachment) {
  Sentence s = sentence_from_spec(
      "born|VERB|0|root on|ADP|3|case July|PROPN|1|obl 31|NUM|3|flat");
  DateParts p;
  p.month = 3;
  p.day = 4;
  Sentence out = apply(build_date_tree(p, s), s);
  EXPECT_EQ(out.at(4).head, 1);
  EXPECT_EQ(out.at(4).deprel, "obl");
  EXPECT_EQ(out.at(2).head, 4);
  EXPECT_EQ(out.at(3).head, 4);
  EXPECT_EQ(out.at(3).deprel, "nmod:tmod");
}

TEST(BuildDateTree, HolidayYear) {
  Sentence s = datetime_fragment({"New", "Year's", "Day", "2000"}, lex());
  EXPECT_EQ(s.at(4).head, 3);
  EXPECT_EQ(s.at(4).deprel, "nmod:tmod");
}

TEST(FindDatetimes, LocatesExpressions) {
  Sentence s = sentence_from_spec(
      "We|PRON|2|nsubj met|VERB|0|root on|ADP|4|case July|PROPN|2|obl "
      "31|NUM|4|flat at|ADP|7|case 10:00|NUM|2|obl pm|NOUN|7|flat");
  std::vector<DateParts> found = find_datetimes(s, lex());
  ASSERT_EQ(found.size(), 2u);
  EXPECT_EQ(found[0].month, 4);
  EXPECT_EQ(found[0].day, 5);
  EXPECT_FALSE(found[0].is_time());
  EXPECT_EQ(found[1].time, 7);
  EXPECT_EQ(found[1].meridiem, 8);
  EXPECT_EQ(found[1].head(), 7);
  EXPECT_EQ(precision_rank(found[0], 5), 5);
  EXPECT_GT(precision_rank(found[0], 5), precision_rank(found[0], 4));
}

TEST(FindDatetimes, LowercaseMonthWordIsNotADate) {
  Sentence s = sentence_from_spec(
      "I|PRON|2|nsubj may|AUX|0|root 3|NUM|2|obj");
  EXPECT_TRUE(find_datetimes(s, lex()).empty());
}

TEST(DetectDatetime, AnalyticFormHasNoFinding) {
  Sentence s = sentence_from_spec(
      "the|DET|2|det thirty-first|ADJ|0|root of|ADP|4|case "
      "July|PROPN|2|nmod");
  EXPECT_TRUE(detect_datetime(s, RuleConfig{}).empty());
}

TEST(DetectDatetime, FlatDateIsReported) {
  Document doc = testing::load_fixture("figures/date_july31.conllu");
  std::vector<Diagnostic> d = detect_datetime(doc.sentences[0], RuleConfig{});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].kind, ConstructionKind::kDateExpression);
  EXPECT_EQ(d[0].key, "July");
  ASSERT_TRUE(d[0].proposed.has_value());
  Document gold = testing::load_fixture("figures/date_july31.gold.conllu");
  EXPECT_EQ(apply(*d[0].proposed, doc.sentences[0]), gold.sentences[0]);
}

}  // namespace
}  // namespace mischief
