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

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "strings.h"

namespace mischief {

std::string_view to_string(NumberedEntityRelation r) {
  switch (r) {
    case NumberedEntityRelation::kNmodDesc: return "nmod:desc";
    case NumberedEntityRelation::kNummodName: return "nummod:name";
    case NumberedEntityRelation::kCompoundOrFlat: return "compound/flat";
  }
  return "nmod:desc";
}

namespace {

NumberedEntityRelation parse_relation(std::string_view v) {
  std::string s = internal::fold_case(v);
  if (s == "nmod:desc" || s == "nmod_desc" || s == "nmoddesc")
    return NumberedEntityRelation::kNmodDesc;
  if (s == "nummod:name" || s == "nummod_name" || s == "nummodname")
    return NumberedEntityRelation::kNummodName;
  if (s == "compound/flat" || s == "compound_or_flat" ||
      s == "compoundorflat")
    return NumberedEntityRelation::kCompoundOrFlat;
  throw std::invalid_argument("unknown numbered_entity_relation '" +
                              std::string(v) + "'");
}

}  // namespace

void RuleConfig::set_lexicon(std::string_view name,
                             const std::filesystem::path& path) {
  Lexicon* slot = lexicons.find(name);
  if (!slot)
    throw std::invalid_argument("unknown lexicon '" + std::string(name) + "'");
  *slot = Lexicon::load(path);
  lexicon_paths[std::string(name)] = path;
}

RuleConfig RuleConfig::parse(std::string_view text,
                             const std::filesystem::path& base_dir) {
  RuleConfig cfg;
  std::size_t lineno = 0;
  for (std::string_view raw : internal::split(text, '\n')) {
    ++lineno;
    std::string_view line = raw.substr(0, raw.find('#'));
    line = internal::trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    std::string key(internal::trim(line.substr(0, eq)));
    std::string value(internal::trim(line.substr(eq + 1)));
    if (key == "numbered_entity_relation") {
      cfg.numbered_entity_relation = parse_relation(value);
    } else if (key == "adverbial_subtype_name") {
      if (value != "adv" && value != "npmod")
        throw std::invalid_argument("adverbial_subtype_name must be adv or npmod");
      cfg.adverbial_subtype_name = value;
    } else if (key.rfind("lexicon.", 0) == 0) {
      std::filesystem::path p(value);
      if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
      cfg.set_lexicon(key.substr(8), p);
    } else {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

RuleConfig RuleConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.parent_path());
}

std::string RuleConfig::to_text() const {
  std::ostringstream out;
  out << "numbered_entity_relation = " << to_string(numbered_entity_relation)
      << "\n";
  out << "adverbial_subtype_name = " << adverbial_subtype_name << "\n";
  for (const auto& [name, path] : lexicon_paths)
    out << "lexicon." << name << " = " << path.string() << "\n";
  return out.str();
}

}  // namespace mischief
