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

#include <algorithm>
#include <cctype>
#include <map>

#include "mischief/number_grammar.h"
#include "mischief/rules.h"
#include "rules_internal.h"
#include "strings.h"

namespace mischief {

using internal::Tree;

bool DateParts::empty() const { return ids().empty(); }

std::vector<int> DateParts::ids() const {
  std::vector<int> v;
  for (const auto& p : {weekday, month, day, holiday, year, era, time, meridiem,
                        timezone, zone_modifier, oclock})
    if (p) v.push_back(*p);
  v.insert(v.end(), commas.begin(), commas.end());
  std::sort(v.begin(), v.end());
  return v;
}

std::optional<int> DateParts::head() const {
  if (time) return time;
  if (holiday) return holiday;
  if (day) return day;
  if (month) return month;
  if (year) return year;
  if (era) return era;
  return weekday;
}

int precision_rank(const DateParts& p, int id) {
  if (p.time == id) return 6;
  if (p.holiday == id || p.day == id) return 5;
  if (p.month == id) return 4;
  if (p.year == id) return 3;
  if (p.era == id) return 2;
  if (p.weekday == id || p.meridiem == id || p.timezone == id ||
      p.oclock == id)
    return 1;
  return 0;
}

namespace {

using Internal = internal::Internal;

int depth(const Sentence& sent, int id) {
  int d = 0;
  for (int cur = id; cur != 0 && d <= sent.size(); cur = sent.at(cur).head) ++d;
  return d;
}

// `top` takes over the attachment of the shallowest span token headed from
// outside the span, and every token in `internal` is attached as given.
EditPlan attach_span(const Sentence& sent, const std::vector<int>& span,
                     int top, const Internal& in) {
  auto inside = [&](int id) {
    return std::find(span.begin(), span.end(), id) != span.end();
  };
  int external = 0;
  for (int id : span) {
    if (inside(sent.at(id).head)) continue;
    if (external == 0 || depth(sent, id) < depth(sent, external)) external = id;
  }
  PlanBuilder plan(sent, "");
  if (external != 0 && external != top) {
    plan.attach(top, sent.at(external).head, sent.at(external).deprel);
    for (int k : sent.children(external))
      if (!inside(k)) plan.set_head(k, top);
  }
  for (const auto& [id, rel] : in) plan.attach(id, rel.first, rel.second);
  return plan.build();
}

bool has_date_part(const DateParts& p) {
  return p.weekday || p.month || p.day || p.holiday || p.year || p.era;
}

}  // namespace

EditPlan build_date_tree(const DateParts& p, const Sentence& sent) {
  if (!has_date_part(p)) throw DateError("no date parts");
  std::optional<int> core = p.holiday ? p.holiday
                            : p.day   ? p.day
                            : p.month ? p.month
                            : p.year  ? p.year
                                      : p.era;
  if (p.month && p.year && !p.day && !p.holiday)
    throw std::invalid_argument(
        "month and year without a day: the year cannot attach to the month");
  Internal in;
  int top = core ? *core : *p.weekday;
  if (core) {
    if (p.month && *p.month != *core) in[*p.month] = {*core, "nmod:tmod"};
    if (p.year && *p.year != *core) in[*p.year] = {*core, "nmod:tmod"};
    if (p.era && *p.era != *core)
      in[*p.era] = {p.year ? *p.year : *core, "nmod:tmod"};
  }
  std::vector<int> date_ids;
  for (const auto& x : {p.month, p.day, p.holiday, p.year, p.era})
    if (x) date_ids.push_back(*x);
  int lo = date_ids.empty() ? 0 : *std::min_element(date_ids.begin(), date_ids.end());
  int hi = date_ids.empty() ? 0 : *std::max_element(date_ids.begin(), date_ids.end());
  if (p.weekday && core) {
    if (*p.weekday < lo) {
      top = *p.weekday;
      in[*core] = {*p.weekday, "appos"};
    } else {
      in[*p.weekday] = {*core, "appos"};
    }
  }
  for (int c : p.commas) {
    int target = c + 1;
    if (p.weekday && *p.weekday < c && c < lo) {
      target = *core;
    } else if (p.weekday && hi < c && c < *p.weekday) {
      target = *p.weekday;
    }
    in[c] = {target, "punct"};
  }
  in.erase(top);
  return attach_span(sent, p.ids(), top, in);
}

EditPlan build_time_tree(const DateParts& p, const Sentence& sent) {
  if (!p.time) throw DateError("no clock time");
  int top = *p.time;
  Internal in;
  if (p.meridiem) in[*p.meridiem] = {top, "nmod:tmod"};
  if (p.timezone) in[*p.timezone] = {top, "nmod:tmod"};
  if (p.zone_modifier && p.timezone) in[*p.zone_modifier] = {*p.timezone, "compound"};
  if (p.oclock) in[*p.oclock] = {top, "advmod"};
  for (int c : p.commas) in[c] = {c + 1, "punct"};
  EditPlan plan = attach_span(sent, p.ids(), top, in);
  if (p.oclock && sent.at(*p.oclock).upos != "ADV")
    plan.edits.push_back(SetUpos{*p.oclock, "ADV"});
  return plan;
}

namespace {

int digits_value(std::string_view f) {
  if (f.empty() || f.size() > 4 || !internal::is_digits(f)) return -1;
  return std::stoi(std::string(f));
}

bool day_shape(std::string_view f) {
  if (f.size() > 2) {
    std::string_view suffix = f.substr(f.size() - 2);
    if (suffix == "st" || suffix == "nd" || suffix == "rd" || suffix == "th")
      f = f.substr(0, f.size() - 2);
  }
  if (f.size() > 2) return false;
  int v = digits_value(f);
  return v >= 1 && v <= 31;
}

bool year_shape(std::string_view f, std::size_t min_digits) {
  return internal::is_digits(f) && f.size() >= min_digits && f.size() <= 4;
}

bool clock_shape(std::string_view f) {
  auto colon = f.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon > 2) return false;
  std::string_view h = f.substr(0, colon), m = f.substr(colon + 1);
  if (m.size() != 2 || !internal::is_digits(h) || !internal::is_digits(m))
    return false;
  return std::stoi(std::string(h)) <= 24 && std::stoi(std::string(m)) <= 59;
}

bool hour_word(const Tree& t, int id) {
  static const std::vector<std::string> kHours = {
      "one", "two",   "three", "four",   "five",   "six",
      "seven", "eight", "nine", "ten", "eleven", "twelve"};
  std::string l = t.lower(id);
  if (std::find(kHours.begin(), kHours.end(), l) != kHours.end()) return true;
  int v = digits_value(l);
  return v >= 1 && v <= 12 && l.size() <= 2;
}

class Scanner {
 public:
  Scanner(const Tree& t, const Lexicons& lex) : t_(t), lex_(lex) {}

  bool month(int id) const {
    return t_.has(id) && t_.capitalized(id) && t_.in(lex_.months, id);
  }
  bool weekday(int id) const {
    return t_.has(id) && t_.capitalized(id) && t_.in(lex_.weekdays, id);
  }
  bool holiday(int id) const {
    return t_.has(id) && t_.capitalized(id) && t_.in(lex_.holidays, id);
  }
  bool era(int id) const {
    return t_.has(id) && t_.capitalized(id) && t_.in(lex_.eras, id);
  }
  bool day(int id) const { return t_.has(id) && day_shape(t_.tok(id).form); }
  bool year(int id, std::size_t min_digits = 3) const {
    return t_.has(id) && year_shape(t_.tok(id).form, min_digits);
  }
  bool comma(int id) const {
    return t_.has(id) && internal::is_comma(t_.tok(id).form);
  }

  // Date core (without weekday) starting at `i`; `end` receives the last id.
  std::optional<DateParts> core(int i, int* end) const {
    DateParts p;
    int j;
    if (month(i) && day(i + 1)) {
      p.month = i;
      p.day = i + 1;
      j = i + 2;
    } else if (day(i) && month(i + 1)) {
      p.day = i;
      p.month = i + 1;
      j = i + 2;
    } else if (holiday(i) && year(i + 1)) {
      p.holiday = i;
      p.year = i + 1;
      j = i + 2;
      if (era(j)) p.era = j++;
      *end = j - 1;
      return p;
    } else if (year(i, 1) && era(i + 1) && !month(i - 1) && !day(i - 1)) {
      p.year = i;
      p.era = i + 1;
      *end = i + 1;
      return p;
    } else {
      return std::nullopt;
    }
    if (comma(j) && year(j + 1)) {
      p.commas.push_back(j);
      p.year = j + 1;
      j += 2;
    } else if (year(j) || (year(j, 1) && era(j + 1))) {
      p.year = j++;
    }
    if (p.year && era(j)) p.era = j++;
    *end = j - 1;
    return p;
  }

  std::optional<DateParts> date(int i, int* end) const {
    if (weekday(i)) {
      int c = comma(i + 1) ? i + 1 : 0;
      int start = c ? i + 2 : i + 1;
      auto p = core(start, end);
      if (!p) return std::nullopt;
      p->weekday = i;
      if (c) p->commas.push_back(c);
      return p;
    }
    auto p = core(i, end);
    if (!p) return std::nullopt;
    int j = *end + 1;
    if (comma(j) && weekday(j + 1)) {
      p->commas.push_back(j);
      p->weekday = j + 1;
      *end = j + 1;
    } else if (weekday(j)) {
      p->weekday = j;
      *end = j;
    }
    return p;
  }

  std::optional<DateParts> time(int i, int* end) const {
    if (!t_.has(i)) return std::nullopt;
    DateParts p;
    int j = i + 1;
    bool oclock = t_.has(j) && t_.form_is(j, {"o'clock", "o’clock"});
    bool meridiem = t_.has(j) && t_.in(lex_.meridiems, j);
    if (clock_shape(t_.tok(i).form)) {
      p.time = i;
    } else if (hour_word(t_, i) && (oclock || meridiem)) {
      p.time = i;
    } else {
      return std::nullopt;
    }
    if (oclock) p.oclock = j++;
    if (t_.has(j) && t_.in(lex_.meridiems, j)) p.meridiem = j++;
    if (t_.has(j) && t_.in(lex_.timezones, j)) {
      p.timezone = j++;
    } else if (t_.has(j + 1) && t_.capitalized(j) && t_.lower(j + 1) == "time" &&
               t_.upos_in(j, {"PROPN"})) {
      p.zone_modifier = j;
      p.timezone = j + 1;
      j += 2;
    }
    *end = j - 1;
    if (*end == i) return std::nullopt;
    return p;
  }

 private:
  const Tree& t_;
  const Lexicons& lex_;
};

}  // namespace

std::vector<DateParts> find_datetimes(const Sentence& sent,
                                      const Lexicons& lex) {
  Tree t(sent);
  Scanner s(t, lex);
  std::vector<DateParts> found;
  for (int i = 1; i <= t.size(); ++i) {
    int end = i;
    auto p = s.date(i, &end);
    if (!p) p = s.time(i, &end);
    if (!p) continue;
    found.push_back(*p);
    i = end;
  }
  return found;
}

Sentence datetime_fragment(const std::vector<std::string>& words,
                           const Lexicons& lex) {
  if (words.empty()) throw DateError("empty expression");
  Sentence sent;
  for (std::size_t i = 0; i < words.size(); ++i) {
    Token tok;
    tok.id = static_cast<int>(i) + 1;
    tok.form = words[i];
    const std::string& f = words[i];
    bool cap = std::isupper(static_cast<unsigned char>(f[0])) != 0;
    if (internal::is_comma(f)) {
      tok.upos = "PUNCT";
    } else if (std::isdigit(static_cast<unsigned char>(f[0])) ||
               (std::isalpha(static_cast<unsigned char>(f[0])) &&
                f != "and" && f != "point" &&
                is_number_word(internal::fold_case(f)))) {
      tok.upos = "NUM";
    } else if (lex.months.contains(f) || lex.weekdays.contains(f) ||
               lex.eras.contains(f) || lex.timezones.contains(f) || cap) {
      tok.upos = "PROPN";
    } else {
      tok.upos = "NOUN";
    }
    tok.lemma = tok.upos == "PROPN" ? f : internal::fold_case(f);
    tok.head = i == 0 ? 0 : 1;
    tok.deprel = i == 0 ? "root" : "dep";
    sent.tokens.push_back(std::move(tok));
  }
  auto found = find_datetimes(sent, lex);
  if (found.empty()) {
    Tree t(sent);
    Scanner s(t, lex);
    // Single parts have no internal structure.
    if (words.size() == 1 && (s.month(1) || s.weekday(1) || s.year(1) ||
                              clock_shape(words[0])))
      return sent;
    throw DateError("no date or time expression in '" +
                    internal::join(words, " ") + "'");
  }
  for (const DateParts& p : found) {
    EditPlan plan = p.is_time() ? build_time_tree(p, sent)
                                : build_date_tree(p, sent);
    sent = apply(plan, sent);
  }
  return sent;
}

std::vector<Diagnostic> detect_datetime(const Sentence& sent,
                                        const RuleConfig& cfg) {
  std::vector<Diagnostic> out;
  Tree t(sent);
  for (const DateParts& p : find_datetimes(sent, cfg.lexicons)) {
    EditPlan plan = p.is_time() ? build_time_tree(p, sent)
                                : build_date_tree(p, sent);
    ConstructionKind kind = p.is_time() ? ConstructionKind::kTimeExpression
                                        : ConstructionKind::kDateExpression;
    int head = *p.head();
    if (!p.is_time() && p.weekday && *p.weekday < head) head = *p.weekday;
    std::string key = p.is_time()   ? "time"
                      : p.month     ? t.tok(*p.month).form
                      : p.holiday   ? t.tok(*p.holiday).form
                                    : "era";
    std::string what = p.is_time() ? "time" : "date";
    internal::push(out, internal::make_diagnostic(
                            sent, kind, p.ids(), std::move(plan),
                            what + " expression should be headed by '" +
                                t.tok(head).form +
                                "' with nmod:tmod connectors",
                            Confidence::kHigh, key));
  }
  return out;
}

}  // namespace mischief
