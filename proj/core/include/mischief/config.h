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

// Options for the points the conventions leave open, plus lexicon overrides.

#ifndef MISCHIEF_CONFIG_H_
#define MISCHIEF_CONFIG_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "mischief/lexicon.h"

namespace mischief {

// Relation used between an entity type (or name) and its numeric identifier.
enum class NumberedEntityRelation {
  kNmodDesc,        // Figure -nmod:desc-> 4
  kNummodName,      // Figure -nummod:name-> 4
  kCompoundOrFlat,  // Figure -compound-> 4, Firefox -flat-> 58.0
};

std::string_view to_string(NumberedEntityRelation r);

struct RuleConfig {
  NumberedEntityRelation numbered_entity_relation =
      NumberedEntityRelation::kNmodDesc;
  // Subtype written for adverbial nominals. "npmod" keeps the legacy name.
  std::string adverbial_subtype_name = "adv";
  std::map<std::string, std::filesystem::path> lexicon_paths;
  Lexicons lexicons = Lexicons::defaults();

  // Loads `path` into the named lexicon and records the override.
  // Throws std::invalid_argument for an unknown name.
  void set_lexicon(std::string_view name, const std::filesystem::path& path);

  std::string adverbial_label(std::string_view base) const {
    return std::string(base) + ":" + adverbial_subtype_name;
  }

  // Flat `key = value` format; `#` starts a comment. Relative lexicon paths
  // resolve against `base_dir`. Throws std::invalid_argument on bad keys or
  // values.
  static RuleConfig parse(std::string_view text,
                          const std::filesystem::path& base_dir = {});
  static RuleConfig load(const std::filesystem::path& path);
  std::string to_text() const;
};

}  // namespace mischief

#endif  // MISCHIEF_CONFIG_H_
