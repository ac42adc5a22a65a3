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

#include "mischief/conllu.h"

#include <algorithm>
#include <array>
#include <charconv>

#include "strings.h"

namespace mischief {

using internal::is_digits;
using internal::split;

namespace {

constexpr std::array<std::string_view, 37> kUniversalRelations = {
    "acl",       "advcl",    "advmod",     "amod",     "appos",
    "aux",       "case",     "cc",         "ccomp",    "clf",
    "compound",  "conj",     "cop",        "csubj",    "dep",
    "det",       "discourse", "dislocated", "expl",    "fixed",
    "flat",      "goeswith", "iobj",       "list",     "mark",
    "nmod",      "nsubj",    "nummod",     "obj",      "obl",
    "orphan",    "parataxis", "punct",     "reparandum", "root",
    "vocative",  "xcomp"};

bool parse_positive(std::string_view s, int* out) {
  if (!is_digits(s) || (s.size() > 1 && s[0] == '0')) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string token_line(const Token& t) {
  std::string line;
  line.reserve(64);
  line += std::to_string(t.id);
  for (const std::string* f : {&t.form, &t.lemma, &t.upos, &t.xpos, &t.feats}) {
    line += '\t';
    line += *f;
  }
  line += '\t';
  line += std::to_string(t.head);
  for (const std::string* f : {&t.deprel, &t.deps, &t.misc}) {
    line += '\t';
    line += *f;
  }
  return line;
}

bool field_ok(const std::string& f) {
  return !f.empty() && f.find_first_of("\t\n") == std::string::npos;
}

}  // namespace

std::string_view to_string(ConlluErrorKind kind) {
  switch (kind) {
    case ConlluErrorKind::kWrongColumnCount: return "WrongColumnCount";
    case ConlluErrorKind::kNonIntegerId: return "NonIntegerId";
    case ConlluErrorKind::kHeadOutOfRange: return "HeadOutOfRange";
    case ConlluErrorKind::kMultipleRoots: return "MultipleRoots";
    case ConlluErrorKind::kCycleDetected: return "CycleDetected";
    case ConlluErrorKind::kUnknownId: return "UnknownId";
    case ConlluErrorKind::kInvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

ConlluError::ConlluError(ConlluErrorKind kind, const std::string& message,
                         std::size_t line, std::size_t sentence, int token)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      line_(line),
      sentence_(sentence),
      token_(token) {}

bool is_universal_relation(std::string_view name) {
  return std::find(kUniversalRelations.begin(), kUniversalRelations.end(),
                   name) != kUniversalRelations.end();
}

RelationLabel RelationLabel::parse(std::string_view label) {
  RelationLabel r;
  auto colon = label.find(':');
  if (colon == std::string_view::npos) {
    r.universal = std::string(label);
  } else {
    r.universal = std::string(label.substr(0, colon));
    r.subtype = std::string(label.substr(colon + 1));
  }
  return r;
}

std::string RelationLabel::str() const {
  return subtype.empty() ? universal : universal + ":" + subtype;
}

bool RelationLabel::is_well_formed() const {
  if (!is_universal_relation(universal)) return false;
  for (char c : subtype)
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'))) return false;
  return true;
}

std::string_view Token::base_relation() const {
  std::string_view d = deprel;
  return d.substr(0, d.find(':'));
}

std::optional<std::string> Token::feature(std::string_view key) const {
  if (feats == "_") return std::nullopt;
  for (std::string_view kv : split(feats, '|')) {
    auto eq = kv.find('=');
    if (eq != std::string_view::npos && kv.substr(0, eq) == key)
      return std::string(kv.substr(eq + 1));
  }
  return std::nullopt;
}

bool Token::is_plural() const {
  auto n = feature("Number");
  return n && *n == "Plur";
}

const Token& Sentence::at(int id) const {
  if (!has(id))
    throw ConlluError(ConlluErrorKind::kUnknownId,
                      "no token with id " + std::to_string(id), 0, 0, id);
  return tokens[id - 1];
}

Token& Sentence::at(int id) {
  if (!has(id))
    throw ConlluError(ConlluErrorKind::kUnknownId,
                      "no token with id " + std::to_string(id), 0, 0, id);
  return tokens[id - 1];
}

std::optional<std::string> Sentence::comment_value(std::string_view key) const {
  for (const std::string& c : comments) {
    std::string_view body = internal::trim(std::string_view(c).substr(1));
    if (body.substr(0, key.size()) != key) continue;
    std::string_view rest = internal::trim(body.substr(key.size()));
    if (!rest.empty() && rest[0] == '=')
      return std::string(internal::trim(rest.substr(1)));
  }
  return std::nullopt;
}

std::vector<int> Sentence::children(int id) const {
  std::vector<int> out;
  for (const Token& t : tokens)
    if (t.head == id) out.push_back(t.id);
  return out;
}

int Sentence::root() const {
  for (const Token& t : tokens)
    if (t.head == 0) return t.id;
  return 0;
}

bool Sentence::dominates(int ancestor, int id) const {
  int guard = size() + 1;
  while (has(id) && guard-- > 0) {
    if (id == ancestor) return true;
    id = tokens[id - 1].head;
  }
  return false;
}

std::string Sentence::text() const {
  std::string out;
  for (const Token& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.form;
  }
  return out;
}

std::optional<ConlluError> check_tree(const Sentence& sent) {
  const int n = sent.size();
  int roots = 0;
  for (const Token& t : sent.tokens) {
    if (t.head < 0 || t.head > n)
      return ConlluError(ConlluErrorKind::kHeadOutOfRange,
                         "token " + std::to_string(t.id) + " has head " +
                             std::to_string(t.head),
                         0, 0, t.id);
    if (t.head == t.id)
      return ConlluError(ConlluErrorKind::kCycleDetected,
                         "token " + std::to_string(t.id) + " is its own head",
                         0, 0, t.id);
    if (t.head == 0) ++roots;
  }
  if (roots > 1)
    return ConlluError(ConlluErrorKind::kMultipleRoots,
                       std::to_string(roots) + " tokens attach to 0");
  // 0 = unvisited, 1 = on current path, 2 = reaches root.
  std::vector<char> state(n + 1, 0);
  for (int start = 1; start <= n; ++start) {
    std::vector<int> path;
    int cur = start;
    while (cur != 0 && state[cur] == 0) {
      state[cur] = 1;
      path.push_back(cur);
      cur = sent.tokens[cur - 1].head;
    }
    if (cur != 0 && state[cur] == 1)
      return ConlluError(ConlluErrorKind::kCycleDetected,
                         "cycle through token " + std::to_string(cur), 0, 0,
                         cur);
    for (int p : path) state[p] = 2;
  }
  if (n > 0 && roots == 0)
    return ConlluError(ConlluErrorKind::kCycleDetected, "no root token");
  return std::nullopt;
}

void validate(const Sentence& sent) {
  for (int i = 0; i < sent.size(); ++i) {
    const Token& t = sent.tokens[i];
    if (t.id != i + 1)
      throw ConlluError(ConlluErrorKind::kInvariantViolation,
                        "token ids must run 1..n; found " +
                            std::to_string(t.id) + " at position " +
                            std::to_string(i + 1),
                        0, 0, t.id);
    for (const std::string* f : {&t.form, &t.lemma, &t.upos, &t.xpos,
                                 &t.feats, &t.deprel, &t.deps, &t.misc}) {
      if (!field_ok(*f))
        throw ConlluError(ConlluErrorKind::kInvariantViolation,
                          "empty field or embedded tab/newline in token " +
                              std::to_string(t.id),
                          0, 0, t.id);
    }
  }
  if (auto err = check_tree(sent))
    throw ConlluError(ConlluErrorKind::kInvariantViolation, err->what(), 0, 0,
                      err->token());
}

Document parse_conllu(std::string_view text,
                      std::vector<ParseWarning>* warnings) {
  Document doc;
  if (text.empty()) return doc;

  std::vector<std::string_view> lines = split(text, '\n');
  if (lines.back().empty()) {
    lines.pop_back();
  } else {
    doc.trailing_blank_policy.final_newline = false;
  }

  std::size_t i = 0;
  while (i < lines.size() && lines[i].empty()) ++i;
  doc.trailing_blank_policy.leading_blank_lines = i;

  while (i < lines.size()) {
    Sentence sent;
    const std::size_t sent_index = doc.sentences.size();
    std::vector<std::size_t> token_lines;
    for (; i < lines.size() && !lines[i].empty(); ++i) {
      std::string_view line = lines[i];
      const std::size_t lineno = i + 1;
      if (line[0] == '#') {
        if (sent.tokens.empty() && sent.verbatim_lines.empty())
          sent.comments.emplace_back(line);
        else
          sent.verbatim_lines.push_back({sent.tokens.size(), std::string(line)});
        continue;
      }
      std::vector<std::string_view> cols = split(line, '\t');
      if (cols.size() != 10)
        throw ConlluError(ConlluErrorKind::kWrongColumnCount,
                          "line " + std::to_string(lineno) + " has " +
                              std::to_string(cols.size()) +
                              " columns, expected 10",
                          lineno, sent_index);
      for (std::string_view c : cols)
        if (c.empty())
          throw ConlluError(ConlluErrorKind::kWrongColumnCount,
                            "line " + std::to_string(lineno) +
                                " has an empty column",
                            lineno, sent_index);

      std::string_view id = cols[0];
      auto dash = id.find('-');
      auto dot = id.find('.');
      if (dash != std::string_view::npos || dot != std::string_view::npos) {
        auto sep = dash != std::string_view::npos ? dash : dot;
        int a = 0, b = 0;
        if (!parse_positive(id.substr(0, sep), &a) ||
            !(parse_positive(id.substr(sep + 1), &b) ||
              (dot != std::string_view::npos && is_digits(id.substr(sep + 1)))))
          throw ConlluError(ConlluErrorKind::kNonIntegerId,
                            "line " + std::to_string(lineno) +
                                ": malformed id '" + std::string(id) + "'",
                            lineno, sent_index);
        sent.verbatim_lines.push_back({sent.tokens.size(), std::string(line)});
        continue;
      }

      Token t;
      if (!parse_positive(id, &t.id))
        throw ConlluError(ConlluErrorKind::kNonIntegerId,
                          "line " + std::to_string(lineno) + ": id '" +
                              std::string(id) + "' is not a positive integer",
                          lineno, sent_index);
      if (t.id != sent.size() + 1)
        throw ConlluError(ConlluErrorKind::kNonIntegerId,
                          "line " + std::to_string(lineno) + ": expected id " +
                              std::to_string(sent.size() + 1) + ", found " +
                              std::string(id),
                          lineno, sent_index, t.id);
      if (cols[6] == "0") {
        t.head = 0;
      } else if (!parse_positive(cols[6], &t.head)) {
        throw ConlluError(ConlluErrorKind::kNonIntegerId,
                          "line " + std::to_string(lineno) + ": head '" +
                              std::string(cols[6]) + "' is not an integer",
                          lineno, sent_index, t.id);
      }
      t.form = cols[1];
      t.lemma = cols[2];
      t.upos = cols[3];
      t.xpos = cols[4];
      t.feats = cols[5];
      t.deprel = cols[7];
      t.deps = cols[8];
      t.misc = cols[9];
      if (warnings && t.deprel != "_" && !t.relation().is_well_formed())
        warnings->push_back(
            {lineno, "unknown relation label '" + t.deprel + "'"});
      sent.tokens.push_back(std::move(t));
      token_lines.push_back(lineno);
    }

    if (auto err = check_tree(sent)) {
      int tok = err->token();
      std::size_t lineno =
          tok >= 1 && tok <= static_cast<int>(token_lines.size())
              ? token_lines[tok - 1]
              : (token_lines.empty() ? i : token_lines.front());
      throw ConlluError(err->kind(),
                        "sentence " + std::to_string(sent_index + 1) +
                            " (line " + std::to_string(lineno) + "): " +
                            err->what(),
                        lineno, sent_index, tok);
    }

    std::size_t blanks = 0;
    while (i < lines.size() && lines[i].empty()) {
      ++blanks;
      ++i;
    }
    sent.blank_lines_after = blanks;
    doc.sentences.push_back(std::move(sent));
  }
  return doc;
}

std::string serialize_sentence(const Sentence& sent) {
  validate(sent);
  std::string out;
  for (const std::string& c : sent.comments) {
    out += c;
    out += '\n';
  }
  auto extra = sent.verbatim_lines.begin();
  for (std::size_t k = 0; k <= sent.tokens.size(); ++k) {
    for (; extra != sent.verbatim_lines.end() && extra->anchor <= k; ++extra) {
      out += extra->text;
      out += '\n';
    }
    if (k < sent.tokens.size()) {
      out += token_line(sent.tokens[k]);
      out += '\n';
    }
  }
  return out;
}

std::string serialize_conllu(const Document& doc) {
  std::string out(doc.trailing_blank_policy.leading_blank_lines, '\n');
  for (const Sentence& sent : doc.sentences) {
    out += serialize_sentence(sent);
    out.append(sent.blank_lines_after, '\n');
  }
  if (!doc.trailing_blank_policy.final_newline && !out.empty() &&
      out.back() == '\n')
    out.pop_back();
  return out;
}

std::vector<int> subtree_span(const Sentence& sent, int id) {
  if (!sent.has(id))
    throw ConlluError(ConlluErrorKind::kUnknownId,
                      "no token with id " + std::to_string(id), 0, 0, id);
  std::vector<int> out;
  for (const Token& t : sent.tokens)
    if (sent.dominates(id, t.id)) out.push_back(t.id);
  return out;
}

bool is_projective(const Sentence& sent) {
  struct Arc {
    int lo, hi;
  };
  std::vector<Arc> arcs;
  int root = 0;
  for (const Token& t : sent.tokens) {
    if (t.head == 0) {
      root = t.id;
      continue;
    }
    arcs.push_back({std::min(t.id, t.head), std::max(t.id, t.head)});
  }
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    if (root && arcs[a].lo < root && root < arcs[a].hi) return false;
    for (std::size_t b = a + 1; b < arcs.size(); ++b) {
      const Arc& x = arcs[a];
      const Arc& y = arcs[b];
      if ((x.lo < y.lo && y.lo < x.hi && x.hi < y.hi) ||
          (y.lo < x.lo && x.lo < y.hi && y.hi < x.hi))
        return false;
    }
  }
  return true;
}

}  // namespace mischief
