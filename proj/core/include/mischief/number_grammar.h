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

// Spelled-out English numbers: parsing into dependency trees, evaluation,
// and verbalization.

#ifndef MISCHIEF_NUMBER_GRAMMAR_H_
#define MISCHIEF_NUMBER_GRAMMAR_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mischief/conllu.h"

namespace mischief {

// Exact non-negative decimal: integer part plus the digits after the point.
struct Decimal {
  std::uint64_t integer = 0;
  std::string fraction;  // digits only, trailing zeros kept

  std::string str() const;
  // Accepts "123", "0.596", "12.". Throws NumberError(kOutOfRange) for
  // negative or oversized values and std::invalid_argument for junk.
  static Decimal parse(std::string_view text);

  friend bool operator==(const Decimal&, const Decimal&) = default;
};

enum class NumberErrorKind {
  kUnknownWord,
  kMalformedSequence,
  kOutOfRange,
  kNonNumericToken,
};

std::string_view to_string(NumberErrorKind kind);

class NumberError : public std::runtime_error {
 public:
  NumberError(NumberErrorKind kind, const std::string& what, int index = -1)
      : std::runtime_error(what), kind_(kind), index_(index) {}
  NumberErrorKind kind() const { return kind_; }
  // 0-based word index, or -1.
  int index() const { return index_; }

 private:
  NumberErrorKind kind_;
  int index_;
};

struct NumberTree {
  std::vector<std::string> tokens;
  std::vector<int> heads;  // 1-based; 0 marks the root
  std::vector<std::string> deprels;
  int root = 0;  // 1-based id of the root token
  Decimal value;

  std::size_t size() const { return tokens.size(); }
  std::vector<int> children(int id) const;
};

// Splits text on whitespace and separates hyphens and commas:
// "thirty-five thousand," -> thirty - five thousand ,
std::vector<std::string> split_number_words(std::string_view text);

// True for words parse_number accepts, including "and", "point", "-", ",".
bool is_number_word(std::string_view word);

NumberTree parse_number(const std::vector<std::string>& words);

// Throws NumberError(kNonNumericToken) if a token is not a number word, or
// kMalformedSequence if the structure does not follow the conventions.
Decimal evaluate(const NumberTree& tree);

// Value below 10^15 with at most 9 fraction digits, else kOutOfRange.
std::vector<std::string> verbalize(const Decimal& n);
std::vector<std::string> verbalize(std::uint64_t n);

// Tokens numbered offset+1.. with NUM/CCONJ/PUNCT tags. The root attaches to
// `attach` as nummod, or is the sentence root when attach is 0.
std::vector<Token> number_to_conllu(const NumberTree& tree, int attach = 0,
                                    int offset = 0);

}  // namespace mischief

#endif  // MISCHIEF_NUMBER_GRAMMAR_H_
