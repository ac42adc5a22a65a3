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

// Frequency counts of detected constructions and their reports.

#ifndef MISCHIEF_STATS_H_
#define MISCHIEF_STATS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mischief/config.h"
#include "mischief/conllu.h"
#include "mischief/rules.h"

namespace mischief {

struct TypeCount {
  std::string form;  // first surface form seen for the key
  std::size_t count = 0;

  friend bool operator==(const TypeCount&, const TypeCount&) = default;
};

struct KindStats {
  ConstructionKind kind = ConstructionKind::kAppellation;
  std::size_t tokens = 0;
  // Every type, most frequent first; ties by case-folded form.
  std::vector<TypeCount> top_types;

  std::size_t types() const { return top_types.size(); }
  friend bool operator==(const KindStats&, const KindStats&) = default;
};

class ConstructionStats {
 public:
  ConstructionStats();

  void add(const Diagnostic& diag);
  void merge(const ConstructionStats& other);

  // One entry per kind, in declaration order.
  const std::vector<KindStats>& kinds() const { return kinds_; }
  const KindStats& of(ConstructionKind kind) const;
  std::size_t total_tokens() const;
  std::size_t total_types() const;

  friend bool operator==(const ConstructionStats&,
                         const ConstructionStats&) = default;

 private:
  friend ConstructionStats stats_from_json(std::string_view text);
  KindStats& mutable_of(ConstructionKind kind);
  std::vector<KindStats> kinds_;
};

// Report row name, e.g. "title/profession" for appellations.
std::string_view row_label(ConstructionKind kind);

// Lints every sentence and counts the findings of every confidence.
ConstructionStats compute_stats(const Document& doc, const RuleConfig& cfg);

enum class ReportFormat { kText, kJson, kTsv };

// Text lists the nonzero kinds under the columns construction, most
// frequent types (top three), tokens and types, then a total row.
std::string render_report(const ConstructionStats& stats, ReportFormat format);

inline constexpr int kStatsSchemaVersion = 1;

// Inverse of the JSON report. Throws std::invalid_argument on bad input.
ConstructionStats stats_from_json(std::string_view text);

}  // namespace mischief

#endif  // MISCHIEF_STATS_H_
