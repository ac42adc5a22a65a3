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

#include "fixtures.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mischief::testing {

namespace {

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(std::mt19937_64& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

const std::vector<std::string> kForms = {
    "the",   "Secretary", "of",  "State", "Clinton", "naïve", "café", "—",
    "5",     "No.",       ",",   "42",    "Lake",    "ran",   "quickly",
    "über",  "O'Brien",   "e.g", "$",     "10:00",   "pm",    "Inc.",
};
const std::vector<std::string> kUpos = {"NOUN", "PROPN", "VERB", "ADJ",
                                        "DET",  "ADP",   "NUM",  "PUNCT",
                                        "PRON", "ADV",   "SYM",  "X"};
const std::vector<std::string> kXpos = {"_", "NN", "NNP", "VBD", "JJ", "CD"};
const std::vector<std::string> kFeats = {"_", "Number=Sing",
                                         "Case=Nom|Number=Plur|Person=3",
                                         "VerbForm=Part"};
const std::vector<std::string> kDeprels = {
    "nsubj", "obj",      "obl",       "nmod",      "nmod:desc", "obl:tmod",
    "flat",  "compound", "appos",     "amod",      "det",       "case",
    "punct", "conj",     "cc",        "nummod",    "advmod",    "nmod:poss",
    "dep",   "parataxis", "list",     "dislocated"};
const std::vector<std::string> kMisc = {"_", "SpaceAfter=No",
                                        "SpaceAfter=No|Translit=x"};
const std::vector<std::string> kPerturbLabels = {
    "flat",    "appos", "compound", "nmod:npmod", "obl:npmod", "nummod",
    "amod",    "obj",   "nmod",     "obl:tmod",   "nmod:tmod", "advmod",
    "dep",     "case",  "conj",     "nmod:desc"};

}  // namespace

std::filesystem::path fixture_dir() { return MISCHIEF_FIXTURE_DIR; }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Document load_fixture(const std::filesystem::path& relative) {
  return parse_conllu(read_file(fixture_dir() / relative));
}

std::vector<std::filesystem::path> corpus_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e :
       std::filesystem::recursive_directory_iterator(fixture_dir())) {
    if (!e.is_regular_file() || e.path().extension() != ".conllu") continue;
    std::string name = e.path().filename().string();
    if (name.ends_with(".gold.conllu")) continue;
    out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Plant> read_plants(const Document& doc) {
  std::vector<Plant> out;
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    auto kind_name = doc.sentences[i].comment_value("plant");
    if (!kind_name) continue;
    auto kind = parse_construction_kind(*kind_name);
    if (!kind) throw std::runtime_error("unknown plant kind " + *kind_name);
    out.push_back({i, *kind,
                   doc.sentences[i].comment_value("plant_key").value_or("")});
  }
  return out;
}

std::optional<Expectation> read_expectation(const Sentence& sent) {
  auto tok = sent.comment_value("expect_token");
  auto label = sent.comment_value("expect");
  if (!tok || !label) return std::nullopt;
  return Expectation{std::stoi(*tok), *label};
}

Sentence sentence_from_spec(std::string_view spec) {
  Sentence sent;
  std::istringstream in{std::string(spec)};
  for (std::string item; in >> item;) {
    std::vector<std::string> p;
    std::stringstream fields(item);
    for (std::string f; std::getline(fields, f, '|');) p.push_back(f);
    if (p.size() < 4) throw std::invalid_argument("bad token spec " + item);
    Token t;
    t.id = sent.size() + 1;
    t.form = p[0];
    t.upos = p[1];
    t.head = std::stoi(p[2]);
    t.deprel = p[3];
    t.xpos = p.size() > 4 ? p[4] : "_";
    if (p.size() > 5) {
      t.feats = p[5];
    } else if (t.xpos == "NNS" || t.xpos == "NNPS") {
      t.feats = "Number=Plur";
    } else if (t.upos == "NOUN" || t.upos == "PROPN") {
      t.feats = "Number=Sing";
    }
    t.lemma = t.form;
    if (t.upos != "PROPN")
      std::transform(t.lemma.begin(), t.lemma.end(), t.lemma.begin(),
                     [](unsigned char c) { return std::tolower(c); });
    sent.tokens.push_back(std::move(t));
  }
  sent.comments.push_back("# text = " + sent.text());
  validate(sent);
  return sent;
}

std::string random_document(std::mt19937_64& rng) {
  std::string out;
  if (chance(rng, 0.1)) out += "\n";
  int sentences = uniform(rng, 1, 6);
  for (int s = 0; s < sentences; ++s) {
    if (chance(rng, 0.8)) out += "# sent_id = fz-" + std::to_string(s) + "\n";
    if (chance(rng, 0.5)) out += "# text = " + pick(rng, kForms) + " …\n";
    if (chance(rng, 0.2)) out += "# newpar\n";
    int n = uniform(rng, 1, 12);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i + 1;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> head(n + 1, 0);
    for (int i = 1; i < n; ++i)
      head[order[i]] = order[uniform(rng, 0, i - 1)];
    for (int id = 1; id <= n; ++id) {
      if (id < n && chance(rng, 0.08))
        out += std::to_string(id) + "-" + std::to_string(id + 1) +
               "\tdon't\t_\t_\t_\t_\t_\t_\t_\t_\n";
      const std::string& form = pick(rng, kForms);
      std::string lemma = chance(rng, 0.3) ? "_" : form;
      std::string deprel = head[id] == 0 ? "root" : pick(rng, kDeprels);
      std::string deps =
          chance(rng, 0.2)
              ? std::to_string(head[id]) + ":" + deprel
              : "_";
      out += std::to_string(id) + "\t" + form + "\t" + lemma + "\t" +
             pick(rng, kUpos) + "\t" + pick(rng, kXpos) + "\t" +
             pick(rng, kFeats) + "\t" + std::to_string(head[id]) + "\t" +
             deprel + "\t" + deps + "\t" + pick(rng, kMisc) + "\n";
      if (chance(rng, 0.05))
        out += std::to_string(id) +
               ".1\tgone\tgo\tVERB\t_\t_\t_\t_\t" + std::to_string(id) +
               ":orphan\t_\n";
      if (chance(rng, 0.03)) out += "# inline remark\n";
    }
    bool last = s + 1 == sentences;
    int blanks = last ? uniform(rng, 0, 2) : uniform(rng, 1, 2);
    out.append(blanks, '\n');
  }
  if (chance(rng, 0.1) && out.ends_with("\n") && !out.ends_with("\n\n"))
    out.pop_back();
  return out;
}

Sentence perturb(const Sentence& sent, std::mt19937_64& rng) {
  Sentence out = sent;
  if (out.size() < 2) return out;
  int changes = uniform(rng, 1, 3);
  for (int c = 0; c < changes; ++c) {
    int id = uniform(rng, 1, out.size());
    if (out.at(id).head == 0) continue;
    if (chance(rng, 0.5)) {
      out.at(id).deprel = pick(rng, kPerturbLabels);
    } else {
      int h = uniform(rng, 1, out.size());
      if (h != id && !out.dominates(id, h)) out.at(id).head = h;
    }
  }
  return out;
}

}  // namespace mischief::testing
