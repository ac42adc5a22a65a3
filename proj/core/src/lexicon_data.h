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

// Bundled lexicon texts; the definitions are generated from
// core/lexicons/*.txt at configure time.

#ifndef MISCHIEF_SRC_LEXICON_DATA_H_
#define MISCHIEF_SRC_LEXICON_DATA_H_

#include <cstddef>
#include <string_view>

namespace mischief::internal {

struct BundledLexicon {
  std::string_view name;
  std::string_view text;
};

extern const BundledLexicon kDefaultLexicons[];
extern const std::size_t kDefaultLexiconCount;

}  // namespace mischief::internal

#endif  // MISCHIEF_SRC_LEXICON_DATA_H_
