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

// Fixture loading and random document generation shared by the unit tests
// and the acceptance runner.

#ifndef MISCHIEF_TESTS_SUPPORT_FIXTURES_H_
#define MISCHIEF_TESTS_SUPPORT_FIXTURES_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mischief/conllu.h"
#include "mischief/rules.h"

namespace mischief::testing {

std::filesystem::path fixture_dir();
std::string read_file(const std::filesystem::path& path);
Document load_fixture(const std::filesystem::path& relative);

// Every *.conllu under the fixture tree except goldens, sorted.
std::vector<std::filesystem::path> corpus_files();

// Expected finding read from `# plant = Kind` / `# plant_key = key`.
struct Plant {
  std::size_t sentence = 0;
  ConstructionKind kind = ConstructionKind::kAppellation;
  std::string key;
};
std::vector<Plant> read_plants(const Document& doc);

// `# expect_token` / `# expect` pair of a contrast sentence.
struct Expectation {
  int token = 0;
  std::string label;
};
std::optional<Expectation> read_expectation(const Sentence& sent);

// Builds a sentence from whitespace-separated `form|UPOS|head|deprel`
// tokens, optionally followed by `|xpos|feats`. NOUN and PROPN default to
// Number=Sing; lemma is the lowercased form except for PROPN.
Sentence sentence_from_spec(std::string_view spec);

// A random, valid CoNLL-U document as text, including comments, multiword
// ranges, empty nodes and irregular blank lines.
std::string random_document(std::mt19937_64& rng);

// Copy of `sent` with some heads and labels scrambled, still a valid tree.
Sentence perturb(const Sentence& sent, std::mt19937_64& rng);

}  // namespace mischief::testing

#endif  // MISCHIEF_TESTS_SUPPORT_FIXTURES_H_
