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

#include "mischief/number_grammar.h"

#include <array>
#include <cctype>
#include <limits>

#include "strings.h"

namespace mischief {

using internal::fold_case;

namespace {

constexpr std::array<std::string_view, 20> kUnits = {
    "zero",    "one",     "two",       "three",    "four",
    "five",    "six",     "seven",     "eight",    "nine",
    "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
    "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};
constexpr std::array<std::string_view, 10> kTens = {
    "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty",
    "ninety"};

struct Scale {
  std::string_view word;
  std::uint64_t value;
};
constexpr std::array<Scale, 4> kScales = {{{"trillion", 1000000000000ULL},
                                          {"billion", 1000000000ULL},
                                          {"million", 1000000ULL},
                                          {"thousand", 1000ULL}}};

constexpr std::uint64_t kVerbalizeLimit = 1000000000000000ULL;  // 10^15

int unit_value(std::string_view w) {
  for (std::size_t i = 0; i < kUnits.size(); ++i)
    if (kUnits[i] == w) return static_cast<int>(i);
  return -1;
}

int tens_value(std::string_view w) {
  for (std::size_t i = 2; i < kTens.size(); ++i)
    if (kTens[i] == w) return static_cast<int>(i * 10);
  return -1;
}

std::uint64_t scale_value(std::string_view w) {
  for (const Scale& s : kScales)
    if (s.word == w) return s.value;
  return 0;
}

// Checked arithmetic against the uint64 range.
std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    throw NumberError(NumberErrorKind::kOutOfRange, "number too large");
  return a + b;
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
    throw NumberError(NumberErrorKind::kOutOfRange, "number too large");
  return a * b;
}

class Parser {
 public:
  explicit Parser(const std::vector<std::string>& words) {
    for (const std::string& w : words) w_.push_back(fold_case(w));
    tree_.tokens = words;
    tree_.heads.assign(words.size(), 0);
    tree_.deprels.assign(words.size(), "");
  }

  NumberTree run() {
    if (w_.empty())
      throw NumberError(NumberErrorKind::kMalformedSequence, "no words");
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (!is_number_word(w_[i]))
        throw NumberError(NumberErrorKind::kUnknownWord,
                          "unknown number word '" + tree_.tokens[i] + "'",
                          static_cast<int>(i));
    std::size_t end = 0;
    while (end < w_.size() && w_[end] != "point") ++end;
    integer_part(end);
    if (end < w_.size()) fraction_part(end);
    tree_.heads[root_] = 0;
    tree_.deprels[root_] = "root";
    tree_.root = static_cast<int>(root_) + 1;
    tree_.value = evaluate(tree_);
    return std::move(tree_);
  }

 private:
  [[noreturn]] void fail(std::size_t i, const std::string& msg) const {
    throw NumberError(NumberErrorKind::kMalformedSequence,
                      msg + " at word " + std::to_string(i + 1),
                      static_cast<int>(i));
  }

  void link(std::size_t dep, std::size_t head, std::string_view rel) {
    tree_.heads[dep] = static_cast<int>(head) + 1;
    tree_.deprels[dep] = std::string(rel);
  }

  bool at(std::size_t i, std::string_view w) const {
    return i < w_.size() && w_[i] == w;
  }

  bool starts_sub_hundred(std::size_t i) const {
    if (i >= w_.size()) return false;
    int u = unit_value(w_[i]);
    return tens_value(w_[i]) > 0 || (u >= 1 && u <= 19);
  }

  // tens [-] [unit] | unit 1..19. Returns the head index.
  std::size_t sub_hundred(std::size_t& i, std::size_t end) {
    if (i < end && tens_value(w_[i]) > 0) {
      std::size_t tens = i++;
      bool hyphen = at(i, "-") && i < end;
      std::size_t u = hyphen ? i + 1 : i;
      int uv = u < end ? unit_value(w_[u]) : -1;
      if (uv >= 1 && uv <= 9) {
        link(tens, u, "compound");
        if (hyphen) link(i, u, "punct");
        i = u + 1;
        return u;
      }
      if (hyphen) fail(i, "hyphen must join tens and units");
      return tens;
    }
    int uv = i < end ? unit_value(w_[i]) : -1;
    if (uv < 1) fail(i, "expected a number word");
    return i++;
  }

  // [unit hundred [and] [sub-hundred]] | sub-hundred. Returns the head.
  std::size_t sub_thousand(std::size_t& i, std::size_t end) {
    int uv = unit_value(w_[i]);
    if (uv >= 1 && uv <= 9 && i + 1 < end && w_[i + 1] == "hundred") {
      std::size_t hundred = i + 1;
      link(i, hundred, "compound");
      i += 2;
      std::size_t j = i;
      std::optional<std::size_t> cc;
      if (at(j, "and") && j + 1 < end && starts_sub_hundred(j + 1)) cc = j++;
      if (j < end && starts_sub_hundred(j)) {
        // A following scale word would make this sub-hundred part a new
        // multiplier ("one hundred five thousand" is read as 105,000).
        i = j;
        std::size_t rest = sub_hundred(i, end);
        link(rest, hundred, "conj");
        if (cc) link(*cc, rest, "cc");
      }
      return hundred;
    }
    if (w_[i] == "hundred") fail(i, "'hundred' needs a multiplier one to nine");
    return sub_hundred(i, end);
  }

  void integer_part(std::size_t end) {
    if (end == 0) fail(0, "missing integer part before 'point'");
    if (w_[0] == "zero") {
      if (end != 1) fail(1, "'zero' must stand alone");
      root_ = 0;
      return;
    }
    std::size_t i = 0;
    std::vector<std::size_t> pending;  // "and" and "," awaiting a conjunct
    std::optional<std::size_t> first;
    std::uint64_t last_scale = 0;
    bool closed = false;  // a group without a scale word ends the sequence
    while (i < end) {
      if (w_[i] == "and" || w_[i] == ",") {
        if (!first) fail(i, "'" + w_[i] + "' before any number");
        pending.push_back(i++);
        continue;
      }
      if (closed) fail(i, "number continues after a sub-thousand group");
      if (scale_value(w_[i]) || w_[i] == "zero" || w_[i] == "-" ||
          w_[i] == "point")
        fail(i, "unexpected '" + w_[i] + "'");
      std::size_t head = sub_thousand(i, end);
      if (i < end && scale_value(w_[i])) {
        std::uint64_t s = scale_value(w_[i]);
        if (last_scale && s >= last_scale)
          fail(i, "scale words must descend");
        last_scale = s;
        link(head, i, "compound");
        head = i++;
      } else {
        closed = true;
      }
      if (!first) {
        first = head;
      } else {
        link(head, *first, "conj");
      }
      for (std::size_t p : pending)
        link(p, head, w_[p] == "and" ? "cc" : "punct");
      pending.clear();
    }
    if (!pending.empty()) fail(pending.back(), "dangling '" + w_[pending.back()] + "'");
    root_ = *first;
  }

  void fraction_part(std::size_t point) {
    std::size_t first = point + 1;
    if (first >= w_.size()) fail(point, "'point' needs digits");
    for (std::size_t i = first; i < w_.size(); ++i) {
      int d = unit_value(w_[i]);
      if (d < 0 || d > 9) fail(i, "expected a digit word after 'point'");
    }
    link(point, first, "cc");
    link(first, root_, "conj");
    for (std::size_t i = first + 1; i < w_.size(); ++i) link(i, first, "conj");
  }

  std::vector<std::string> w_;
  NumberTree tree_;
  std::size_t root_ = 0;
};

struct Evaluator {
  const NumberTree& t;
  std::vector<std::string> w;
  std::vector<std::vector<int>> kids;

  explicit Evaluator(const NumberTree& tree) : t(tree) {
    for (const auto& s : tree.tokens) w.push_back(fold_case(s));
    kids.resize(tree.size() + 1);
    for (std::size_t i = 0; i < tree.size(); ++i)
      kids[tree.heads[i]].push_back(static_cast<int>(i) + 1);
  }

  const std::string& word(int id) const { return w[id - 1]; }
  const std::string& rel(int id) const { return t.deprels[id - 1]; }

  [[noreturn]] void malformed(int id, const std::string& msg) const {
    throw NumberError(NumberErrorKind::kMalformedSequence,
                      msg + " at word " + std::to_string(id), id - 1);
  }

  bool is_fraction_start(int id) const {
    for (int k : kids[id])
      if (rel(k) == "cc" && word(k) == "point") return true;
    return false;
  }

  std::uint64_t word_value(int id) const {
    const std::string& x = word(id);
    if (int u = unit_value(x); u >= 0) return static_cast<std::uint64_t>(u);
    if (int tv = tens_value(x); tv > 0) return static_cast<std::uint64_t>(tv);
    if (x == "hundred") return 100;
    if (std::uint64_t s = scale_value(x)) return s;
    throw NumberError(NumberErrorKind::kNonNumericToken,
                      "'" + t.tokens[id - 1] + "' has no numeric value", id - 1);
  }

  std::uint64_t integer(int id) const {
    std::uint64_t base = word_value(id);
    const std::string& x = word(id);
    bool multiplicative = x == "hundred" || scale_value(x) != 0;
    std::uint64_t value = base;
    bool seen_compound = false;
    for (int k : kids[id]) {
      const std::string& r = rel(k);
      if (r == "compound") {
        if (seen_compound) malformed(k, "second compound dependent");
        seen_compound = true;
        std::uint64_t sub = integer(k);
        value = multiplicative ? mul(base, sub) : add(base, sub);
      }
    }
    for (int k : kids[id]) {
      const std::string& r = rel(k);
      if (r == "conj") {
        if (is_fraction_start(k)) continue;
        value = add(value, integer(k));
      } else if (r != "compound" && r != "cc" && r != "punct") {
        malformed(k, "unexpected relation '" + r + "'");
      }
    }
    return value;
  }

  std::string digits(int first) const {
    std::string out;
    auto digit = [&](int id) {
      int d = unit_value(word(id));
      if (d < 0 || d > 9) malformed(id, "fraction word is not a digit");
      out += static_cast<char>('0' + d);
    };
    digit(first);
    for (int k : kids[first])
      if (rel(k) == "conj") digit(k);
    return out;
  }

  Decimal run() const {
    if (t.root < 1 || t.root > static_cast<int>(t.size()))
      malformed(1, "tree has no root");
    Decimal d;
    d.integer = integer(t.root);
    for (int k : kids[t.root])
      if (rel(k) == "conj" && is_fraction_start(k)) d.fraction = digits(k);
    return d;
  }
};

// Words for 1..999.
void sub_thousand_words(unsigned n, bool and_before_rest,
                        std::vector<std::string>& out) {
  unsigned h = n / 100, rest = n % 100;
  if (h) {
    out.emplace_back(kUnits[h]);
    out.emplace_back("hundred");
    if (rest && and_before_rest) out.emplace_back("and");
  }
  if (rest >= 20) {
    out.emplace_back(kTens[rest / 10]);
    if (rest % 10) {
      out.emplace_back("-");
      out.emplace_back(kUnits[rest % 10]);
    }
  } else if (rest) {
    out.emplace_back(kUnits[rest]);
  }
}

}  // namespace

std::string_view to_string(NumberErrorKind kind) {
  switch (kind) {
    case NumberErrorKind::kUnknownWord: return "UnknownWord";
    case NumberErrorKind::kMalformedSequence: return "MalformedSequence";
    case NumberErrorKind::kOutOfRange: return "OutOfRange";
    case NumberErrorKind::kNonNumericToken: return "NonNumericToken";
  }
  return "UnknownWord";
}

std::string Decimal::str() const {
  std::string s = std::to_string(integer);
  if (!fraction.empty()) s += "." + fraction;
  return s;
}

Decimal Decimal::parse(std::string_view text) {
  text = internal::trim(text);
  if (!text.empty() && text[0] == '-')
    throw NumberError(NumberErrorKind::kOutOfRange,
                      "negative numbers are not supported");
  if (!text.empty() && text[0] == '+') text.remove_prefix(1);
  auto dot = text.find('.');
  std::string_view ip = text.substr(0, dot);
  std::string_view fp =
      dot == std::string_view::npos ? std::string_view() : text.substr(dot + 1);
  std::string digits;
  for (char c : ip)
    if (c != ',') digits += c;
  if (!internal::is_digits(digits) || (!fp.empty() && !internal::is_digits(fp)))
    throw std::invalid_argument("not a decimal number: '" + std::string(text) +
                                "'");
  Decimal d;
  for (char c : digits) d.integer = add(mul(d.integer, 10), c - '0');
  d.fraction = std::string(fp);
  return d;
}

std::vector<int> NumberTree::children(int id) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < heads.size(); ++i)
    if (heads[i] == id) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<std::string> split_number_words(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (c == '-' || c == ',') {
      flush();
      out.emplace_back(1, c);
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

bool is_number_word(std::string_view word) {
  std::string w = fold_case(word);
  return unit_value(w) >= 0 || tens_value(w) > 0 || scale_value(w) ||
         w == "hundred" || w == "and" || w == "point" || w == "-" || w == ",";
}

NumberTree parse_number(const std::vector<std::string>& words) {
  return Parser(words).run();
}

Decimal evaluate(const NumberTree& tree) { return Evaluator(tree).run(); }

std::vector<std::string> verbalize(const Decimal& n) {
  if (n.integer >= kVerbalizeLimit || n.fraction.size() > 9)
    throw NumberError(NumberErrorKind::kOutOfRange,
                      "cannot verbalize " + n.str());
  std::vector<std::string> out;
  if (n.integer == 0) {
    out.emplace_back("zero");
  } else {
    std::uint64_t rest = n.integer;
    for (const Scale& s : kScales) {
      unsigned group = static_cast<unsigned>(rest / s.value);
      rest %= s.value;
      if (!group) continue;
      if (!out.empty()) out.emplace_back(",");
      sub_thousand_words(group, false, out);
      out.emplace_back(s.word);
    }
    if (rest) {
      unsigned last = static_cast<unsigned>(rest);
      if (!out.empty() && last < 100) {
        out.emplace_back("and");
      } else if (!out.empty()) {
        out.emplace_back(",");
      }
      sub_thousand_words(last, true, out);
    }
  }
  if (!n.fraction.empty()) {
    out.emplace_back("point");
    for (char c : n.fraction) out.emplace_back(kUnits[c - '0']);
  }
  return out;
}

std::vector<std::string> verbalize(std::uint64_t n) {
  return verbalize(Decimal{n, ""});
}

std::vector<Token> number_to_conllu(const NumberTree& tree, int attach,
                                    int offset) {
  std::vector<Token> out;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    Token t;
    t.id = offset + static_cast<int>(i) + 1;
    t.form = tree.tokens[i];
    std::string w = fold_case(t.form);
    t.lemma = w;
    if (w == "and" || w == "point") {
      t.upos = "CCONJ";
    } else if (w == "-" || w == ",") {
      t.upos = "PUNCT";
    } else {
      t.upos = "NUM";
    }
    if (tree.heads[i] == 0) {
      t.head = attach;
      t.deprel = attach ? "nummod" : "root";
    } else {
      t.head = offset + tree.heads[i];
      t.deprel = tree.deprels[i];
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace mischief
