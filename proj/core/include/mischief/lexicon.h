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

// Word lists that drive construction detection.

#ifndef MISCHIEF_LEXICON_H_
#define MISCHIEF_LEXICON_H_

#include <filesystem>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mischief/conllu.h"

namespace mischief {

// An immutable, cheaply copyable set of words. Lookups are case-insensitive
// unless asked otherwise.
class Lexicon {
 public:
  Lexicon();
  Lexicon(std::initializer_list<std::string_view> words);
  explicit Lexicon(const std::vector<std::string>& words);

  // One entry per line; blank lines and `#` comments are ignored.
  static Lexicon from_text(std::string_view text);
  // Throws std::runtime_error if the file cannot be read.
  static Lexicon load(const std::filesystem::path& path);

  bool contains(std::string_view word, bool case_sensitive = false) const;
  // Form or lemma hit.
  bool contains_token(const Token& token) const;

  std::size_t size() const { return data_->exact.size(); }
  bool empty() const { return data_->exact.empty(); }
  const std::set<std::string>& entries() const { return data_->exact; }

 private:
  struct Data {
    std::set<std::string> exact;
    std::set<std::string> folded;
  };
  std::shared_ptr<const Data> data_;
};

// Every lexicon the rules consult. Names match the file stems under
// core/lexicons/ and the `lexicon.<name>` configuration keys.
struct Lexicons {
  Lexicon titles;
  Lexicon occupations;
  Lexicon entity_types_left;
  Lexicon entity_types_right;
  Lexicon street_types;
  Lexicon numbering_types;
  Lexicon numbering_words;
  Lexicon directions;
  Lexicon direction_adjectives;
  Lexicon approximators;
  Lexicon business_suffixes_amod;
  Lexicon business_suffixes_desc;
  Lexicon personal_suffixes_amod;
  Lexicon personal_suffixes_desc;
  Lexicon generational;
  Lexicon locales;
  Lexicon months;
  Lexicon weekdays;
  Lexicon holidays;
  Lexicon eras;
  Lexicon meridiems;
  Lexicon timezones;
  Lexicon temporal_nouns;
  Lexicon temporal_adverbs;
  Lexicon measure_units;
  Lexicon temperature_scales;

  // The bundled lists.
  static const Lexicons& defaults();

  static const std::vector<std::string>& names();
  Lexicon* find(std::string_view name);
  const Lexicon* find(std::string_view name) const;
};

// Raw text of a bundled lexicon, or empty if `name` is unknown.
std::string_view default_lexicon_text(std::string_view name);

}  // namespace mischief

#endif  // MISCHIEF_LEXICON_H_
