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

#include "mischief/lexicon.h"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lexicon_data.h"
#include "strings.h"

namespace mischief {

using internal::fold_case;

Lexicon::Lexicon() : data_(std::make_shared<const Data>()) {}

Lexicon::Lexicon(std::initializer_list<std::string_view> words) {
  auto d = std::make_shared<Data>();
  for (std::string_view w : words) {
    d->exact.emplace(w);
    d->folded.insert(fold_case(w));
  }
  data_ = std::move(d);
}

Lexicon::Lexicon(const std::vector<std::string>& words) {
  auto d = std::make_shared<Data>();
  for (const std::string& w : words) {
    d->exact.insert(w);
    d->folded.insert(fold_case(w));
  }
  data_ = std::move(d);
}

Lexicon Lexicon::from_text(std::string_view text) {
  std::vector<std::string> words;
  for (std::string_view line : internal::split(text, '\n')) {
    std::string_view entry = internal::trim(line);
    if (entry.empty() || entry[0] == '#') continue;
    words.emplace_back(entry);
  }
  return Lexicon(words);
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read lexicon " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

bool Lexicon::contains(std::string_view word, bool case_sensitive) const {
  if (case_sensitive) return data_->exact.count(std::string(word)) > 0;
  return data_->folded.count(fold_case(word)) > 0;
}

bool Lexicon::contains_token(const Token& token) const {
  return contains(token.form) || (token.lemma != "_" && contains(token.lemma));
}

namespace {

Lexicons build_defaults() {
  Lexicons lex;
  for (const std::string& name : Lexicons::names())
    *lex.find(name) = Lexicon::from_text(default_lexicon_text(name));
  return lex;
}

}  // namespace

const Lexicons& Lexicons::defaults() {
  static const Lexicons kDefaults = build_defaults();
  return kDefaults;
}

const std::vector<std::string>& Lexicons::names() {
  static const std::vector<std::string> kNames = {
      "titles",
      "occupations",
      "entity_types_left",
      "entity_types_right",
      "street_types",
      "numbering_types",
      "numbering_words",
      "directions",
      "direction_adjectives",
      "approximators",
      "business_suffixes_amod",
      "business_suffixes_desc",
      "personal_suffixes_amod",
      "personal_suffixes_desc",
      "generational",
      "locales",
      "months",
      "weekdays",
      "holidays",
      "eras",
      "meridiems",
      "timezones",
      "temporal_nouns",
      "temporal_adverbs",
      "measure_units",
      "temperature_scales",
  };
  return kNames;
}

Lexicon* Lexicons::find(std::string_view name) {
  return const_cast<Lexicon*>(std::as_const(*this).find(name));
}

const Lexicon* Lexicons::find(std::string_view name) const {
  static const std::map<std::string_view, Lexicon Lexicons::*, std::less<>>
      kMembers = {
          {"titles", &Lexicons::titles},
          {"occupations", &Lexicons::occupations},
          {"entity_types_left", &Lexicons::entity_types_left},
          {"entity_types_right", &Lexicons::entity_types_right},
          {"street_types", &Lexicons::street_types},
          {"numbering_types", &Lexicons::numbering_types},
          {"numbering_words", &Lexicons::numbering_words},
          {"directions", &Lexicons::directions},
          {"direction_adjectives", &Lexicons::direction_adjectives},
          {"approximators", &Lexicons::approximators},
          {"business_suffixes_amod", &Lexicons::business_suffixes_amod},
          {"business_suffixes_desc", &Lexicons::business_suffixes_desc},
          {"personal_suffixes_amod", &Lexicons::personal_suffixes_amod},
          {"personal_suffixes_desc", &Lexicons::personal_suffixes_desc},
          {"generational", &Lexicons::generational},
          {"locales", &Lexicons::locales},
          {"months", &Lexicons::months},
          {"weekdays", &Lexicons::weekdays},
          {"holidays", &Lexicons::holidays},
          {"eras", &Lexicons::eras},
          {"meridiems", &Lexicons::meridiems},
          {"timezones", &Lexicons::timezones},
          {"temporal_nouns", &Lexicons::temporal_nouns},
          {"temporal_adverbs", &Lexicons::temporal_adverbs},
          {"measure_units", &Lexicons::measure_units},
          {"temperature_scales", &Lexicons::temperature_scales},
      };
  auto it = kMembers.find(name);
  return it == kMembers.end() ? nullptr : &(this->*(it->second));
}

std::string_view default_lexicon_text(std::string_view name) {
  for (std::size_t i = 0; i < internal::kDefaultLexiconCount; ++i)
    if (internal::kDefaultLexicons[i].name == name)
      return internal::kDefaultLexicons[i].text;
  return {};
}

}  // namespace mischief
