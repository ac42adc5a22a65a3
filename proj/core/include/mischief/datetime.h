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

// Dependency structure for date and time expressions.

#ifndef MISCHIEF_DATETIME_H_
#define MISCHIEF_DATETIME_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mischief/conllu.h"
#include "mischief/lexicon.h"
#include "mischief/pattern.h"

namespace mischief {

// Token ids (1-based) of the parts of one date or time expression.
struct DateParts {
  std::optional<int> weekday;
  std::optional<int> month;
  std::optional<int> day;
  std::optional<int> holiday;  // "Day" in "New Year's Day 2000"
  std::optional<int> year;
  std::optional<int> era;
  std::optional<int> time;
  std::optional<int> meridiem;
  std::optional<int> timezone;
  std::optional<int> zone_modifier;  // "London" in "London time"
  std::optional<int> oclock;
  std::vector<int> commas;

  bool empty() const;
  bool is_time() const { return time.has_value(); }
  // All part and comma ids, sorted.
  std::vector<int> ids() const;
  // Most precise part present: day or holiday, then month, year, era; for
  // times the clock value.
  std::optional<int> head() const;
};

// Higher is more precise. Parts not ranked return 0.
int precision_rank(const DateParts& parts, int id);

class DateError : public std::invalid_argument {
 public:
  enum class Kind { kNoParts };
  explicit DateError(const std::string& what)
      : std::invalid_argument(what), kind_(Kind::kNoParts) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Plans that give the expression its conventional structure inside `sent`.
// The head takes over the expression's external attachment. Throws
// DateError when no date (resp. time) part is present.
EditPlan build_date_tree(const DateParts& parts, const Sentence& sent);
EditPlan build_time_tree(const DateParts& parts, const Sentence& sent);

// Date and time expressions found by lexicon and numeric shape.
std::vector<DateParts> find_datetimes(const Sentence& sent,
                                      const Lexicons& lex);

// Builds a standalone sentence from a pre-tokenized expression, tags it by
// shape and lexicon, and applies the date or time plan. Throws DateError
// when the words contain no date or time expression.
Sentence datetime_fragment(const std::vector<std::string>& words,
                           const Lexicons& lex);

}  // namespace mischief

#endif  // MISCHIEF_DATETIME_H_
