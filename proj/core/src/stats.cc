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

#include "mischief/stats.h"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "json.hpp"
#include "strings.h"

namespace mischief {

namespace {

constexpr std::array<std::string_view, kConstructionKindCount> kLabels = {
    "title/profession",  "embellishment",   "post-name descriptor",
    "pronoun+noun",      "appos violation", "analyzable name",
    "cardinal direction", "entity type",    "numbering",
    "number word",       "numeric range",   "company",
    "personal suffix",   "nickname",        "parenthetical",
    "street address",    "locale",          "phone number",
    "address list",      "phrasal attributive", "synthetic compound",
    "adverbial NP",      "temporal NP",     "rate",
    "approximator",      "unit expression", "spelled number",
    "date",              "time",
};

void sort_types(std::vector<TypeCount>& types) {
  std::sort(types.begin(), types.end(),
            [](const TypeCount& a, const TypeCount& b) {
              if (a.count != b.count) return a.count > b.count;
              return internal::fold_case(a.form) < internal::fold_case(b.form);
            });
}

void add_type(KindStats& ks, const std::string& form, std::size_t count) {
  std::string key = internal::fold_case(form);
  auto it = std::find_if(ks.top_types.begin(), ks.top_types.end(),
                         [&](const TypeCount& tc) {
                           return internal::fold_case(tc.form) == key;
                         });
  if (it == ks.top_types.end()) {
    ks.top_types.push_back({form, count});
  } else {
    it->count += count;
  }
  sort_types(ks.top_types);
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string top_three(const KindStats& ks) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < ks.top_types.size() && i < 3; ++i)
    parts.push_back(ks.top_types[i].form + " (" +
                    std::to_string(ks.top_types[i].count) + ")");
  return internal::join(parts, ", ");
}

std::string render_text(const ConstructionStats& stats) {
  struct Row {
    std::string label, types, tokens, type_count;
  };
  std::vector<Row> rows;
  for (const KindStats& ks : stats.kinds()) {
    if (ks.tokens == 0) continue;
    rows.push_back({std::string(row_label(ks.kind)), top_three(ks),
                    std::to_string(ks.tokens), std::to_string(ks.types())});
  }
  Row header = {"construction", "most frequent types", "tokens", "types"};
  Row total = {"total", "", std::to_string(stats.total_tokens()),
               std::to_string(stats.total_types())};
  std::array<std::size_t, 4> w = {0, 0, 0, 0};
  auto widen = [&](const Row& r) {
    w[0] = std::max(w[0], r.label.size());
    w[1] = std::max(w[1], r.types.size());
    w[2] = std::max(w[2], r.tokens.size());
    w[3] = std::max(w[3], r.type_count.size());
  };
  widen(header);
  widen(total);
  for (const Row& r : rows) widen(r);
  auto line = [&](const Row& r) {
    std::string s = pad_right(r.label, w[0]) + "  " + pad_right(r.types, w[1]) +
                    "  " + pad_left(r.tokens, w[2]) + "  " +
                    pad_left(r.type_count, w[3]);
    return s + "\n";
  };
  std::string rule = std::string(w[0], '-') + "  " + std::string(w[1], '-') +
                     "  " + std::string(w[2], '-') + "  " +
                     std::string(w[3], '-') + "\n";
  std::string out = line(header) + rule;
  for (const Row& r : rows) out += line(r);
  out += rule + line(total);
  return out;
}

std::string render_json(const ConstructionStats& stats) {
  nlohmann::ordered_json j;
  j["schema_version"] = kStatsSchemaVersion;
  nlohmann::ordered_json kinds = nlohmann::ordered_json::array();
  for (const KindStats& ks : stats.kinds()) {
    if (ks.tokens == 0) continue;
    nlohmann::ordered_json k;
    k["kind"] = std::string(to_string(ks.kind));
    k["label"] = std::string(row_label(ks.kind));
    k["tokens"] = ks.tokens;
    k["types"] = ks.types();
    nlohmann::ordered_json types = nlohmann::ordered_json::array();
    for (const TypeCount& tc : ks.top_types)
      types.push_back({{"type", tc.form}, {"count", tc.count}});
    k["top_types"] = std::move(types);
    kinds.push_back(std::move(k));
  }
  j["constructions"] = std::move(kinds);
  j["total"] = {{"tokens", stats.total_tokens()},
                {"types", stats.total_types()}};
  return j.dump(2) + "\n";
}

std::string render_tsv(const ConstructionStats& stats) {
  std::string out = "kind\tlabel\ttokens\ttypes\ttop_types\n";
  for (const KindStats& ks : stats.kinds()) {
    if (ks.tokens == 0) continue;
    std::vector<std::string> types;
    for (const TypeCount& tc : ks.top_types)
      types.push_back(tc.form + "=" + std::to_string(tc.count));
    out += std::string(to_string(ks.kind)) + "\t" +
           std::string(row_label(ks.kind)) + "\t" + std::to_string(ks.tokens) +
           "\t" + std::to_string(ks.types()) + "\t" +
           internal::join(types, "|") + "\n";
  }
  out += "TOTAL\ttotal\t" + std::to_string(stats.total_tokens()) + "\t" +
         std::to_string(stats.total_types()) + "\t\n";
  return out;
}

}  // namespace

ConstructionStats::ConstructionStats() {
  for (ConstructionKind k : all_construction_kinds())
    kinds_.push_back(KindStats{k, 0, {}});
}

KindStats& ConstructionStats::mutable_of(ConstructionKind kind) {
  return kinds_[static_cast<std::size_t>(kind)];
}

const KindStats& ConstructionStats::of(ConstructionKind kind) const {
  return kinds_[static_cast<std::size_t>(kind)];
}

void ConstructionStats::add(const Diagnostic& diag) {
  KindStats& ks = mutable_of(diag.kind);
  ++ks.tokens;
  add_type(ks, diag.key, 1);
}

void ConstructionStats::merge(const ConstructionStats& other) {
  for (const KindStats& o : other.kinds_) {
    KindStats& ks = mutable_of(o.kind);
    ks.tokens += o.tokens;
    for (const TypeCount& tc : o.top_types) add_type(ks, tc.form, tc.count);
  }
}

std::size_t ConstructionStats::total_tokens() const {
  std::size_t n = 0;
  for (const KindStats& ks : kinds_) n += ks.tokens;
  return n;
}

std::size_t ConstructionStats::total_types() const {
  std::size_t n = 0;
  for (const KindStats& ks : kinds_) n += ks.types();
  return n;
}

std::string_view row_label(ConstructionKind kind) {
  return kLabels[static_cast<std::size_t>(kind)];
}

ConstructionStats compute_stats(const Document& doc, const RuleConfig& cfg) {
  ConstructionStats stats;
  for (const Sentence& sent : doc.sentences)
    for (const Diagnostic& d : lint_sentence(sent, cfg)) stats.add(d);
  return stats;
}

std::string render_report(const ConstructionStats& stats, ReportFormat format) {
  switch (format) {
    case ReportFormat::kText:
      return render_text(stats);
    case ReportFormat::kJson:
      return render_json(stats);
    case ReportFormat::kTsv:
      return render_tsv(stats);
  }
  return {};
}

ConstructionStats stats_from_json(std::string_view text) {
  ConstructionStats stats;
  try {
    auto j = nlohmann::json::parse(text);
    if (j.at("schema_version").get<int>() != kStatsSchemaVersion)
      throw std::invalid_argument("unsupported stats schema_version");
    for (const auto& k : j.at("constructions")) {
      auto kind = parse_construction_kind(k.at("kind").get<std::string>());
      if (!kind) throw std::invalid_argument("unknown construction kind");
      KindStats& ks = stats.mutable_of(*kind);
      ks.tokens += k.at("tokens").get<std::size_t>();
      for (const auto& t : k.at("top_types"))
        add_type(ks, t.at("type").get<std::string>(),
                 t.at("count").get<std::size_t>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad stats JSON: ") + e.what());
  }
  return stats;
}

}  // namespace mischief
