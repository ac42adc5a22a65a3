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

// mischief: lint, rewrite and count mischievous nominal constructions in
// CoNLL-U treebanks; inspect number and date trees.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mischief/config.h"
#include "mischief/conllu.h"
#include "mischief/datetime.h"
#include "mischief/number_grammar.h"
#include "mischief/rules.h"
#include "mischief/stats.h"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace mischief {
namespace {

constexpr int kExitClean = 0;
constexpr int kExitFindings = 1;
constexpr int kExitError = 2;
constexpr int kSchemaVersion = 1;

struct Options {
  std::string config_path;
  std::vector<std::string> lexicons;  // name=path
  std::string numbered_relation;
  std::string adverbial_subtype;
  std::vector<std::string> inputs;
  std::string format = "text";
  std::string output;
  std::string log;
  bool in_place = false;
  bool dry_run = false;
  bool edit_list = false;
  std::vector<std::string> words;
  std::string verbalize;
  std::string roundtrip;
};

RuleConfig load_config(const Options& opt) {
  RuleConfig cfg;
  if (!opt.config_path.empty()) {
    cfg = RuleConfig::load(opt.config_path);
  } else if (fs::exists("mischief.conf")) {
    cfg = RuleConfig::load("mischief.conf");
  }
  if (!opt.numbered_relation.empty() || !opt.adverbial_subtype.empty()) {
    std::string text = cfg.to_text();
    if (!opt.numbered_relation.empty())
      text += "numbered_entity_relation = " + opt.numbered_relation + "\n";
    if (!opt.adverbial_subtype.empty())
      text += "adverbial_subtype_name = " + opt.adverbial_subtype + "\n";
    cfg = RuleConfig::parse(text);
  }
  for (const std::string& spec : opt.lexicons) {
    auto eq = spec.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--lexicon expects NAME=PATH, got '" + spec +
                                  "'");
    cfg.set_lexicon(spec.substr(0, eq), spec.substr(eq + 1));
  }
  return cfg;
}

struct FileRun {
  std::string path;
  Document doc;
  RunResult result;
  std::string error;  // parse, I/O or rule error
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    buf << in.rdbuf();
  }
  return buf.str();
}

FileRun run_file(const std::string& path, const RuleConfig& cfg, RunMode mode) {
  FileRun run;
  run.path = path;
  try {
    std::string text = read_input(path);
    run.doc = parse_conllu(text);
    run.result = run_rules(run.doc, cfg, mode);
  } catch (const ConlluError& e) {
    run.error = path + ":" + std::to_string(e.line()) + ": " + e.what();
  } catch (const RuleError& e) {
    run.error = path + ": sentence " + std::to_string(e.sentence_index() + 1) +
                ": rule " + e.rule_id() + ": " + e.what();
  } catch (const std::exception& e) {
    run.error = e.what();
  }
  return run;
}

// Files run concurrently; results come back in input order.
std::vector<FileRun> run_files(const std::vector<std::string>& inputs,
                               const RuleConfig& cfg, RunMode mode) {
  std::vector<std::string> paths = inputs.empty()
                                       ? std::vector<std::string>{"-"}
                                       : inputs;
  std::vector<std::future<FileRun>> jobs;
  for (const std::string& p : paths) {
    auto policy = p == "-" ? std::launch::deferred : std::launch::async;
    jobs.push_back(std::async(policy, run_file, p, std::cref(cfg), mode));
  }
  std::vector<FileRun> runs;
  for (auto& j : jobs) runs.push_back(j.get());
  return runs;
}

std::string sent_id(const Document& doc, std::size_t index) {
  if (index < doc.sentences.size())
    if (auto id = doc.sentences[index].comment_value("sent_id")) return *id;
  return std::to_string(index + 1);
}

std::string span_text(const std::vector<int>& ids) {
  std::string s;
  for (int id : ids) s += (s.empty() ? "" : ",") + std::to_string(id);
  return s;
}

std::string edit_line(const std::string& path, const Document& doc,
                      const AppliedEdit& e) {
  std::string upos = e.old_upos == e.new_upos ? "-" : e.old_upos + "->" + e.new_upos;
  return path + "\t" + sent_id(doc, e.sentence_index) + "\t" +
         std::to_string(e.token) + "\t" + e.form + "\t" +
         std::to_string(e.old_head) + ":" + e.old_deprel + " -> " +
         std::to_string(e.new_head) + ":" + e.new_deprel + "\t" + upos + "\t" +
         e.rule_id + "\t" + std::string(to_string(e.confidence)) + "\n";
}

std::string review_line(const std::string& path, const Document& doc,
                        const Diagnostic& d) {
  return path + "\t" + sent_id(doc, d.sentence_index) + "\treview\t" +
         span_text(d.token_span) + "\t" + d.rule_id + "\t" +
         std::string(to_string(d.confidence)) + "\t" + d.message + "\n";
}

// Edits that linting proposes, High plans first then findings for review.
std::string proposed_edit_list(const FileRun& run) {
  std::string out;
  for (const Diagnostic& d : run.result.diagnostics) {
    if (d.confidence != Confidence::kHigh || !d.proposed) continue;
    const Sentence& sent = run.doc.sentences[d.sentence_index];
    for (const AppliedEdit& e : describe_plan(d, sent))
      out += edit_line(run.path, run.doc, e);
  }
  for (const Diagnostic& d : run.result.diagnostics)
    if (d.confidence != Confidence::kHigh || !d.proposed)
      out += review_line(run.path, run.doc, d);
  return out;
}

json diagnostic_json(const FileRun& run, const Diagnostic& d) {
  json j;
  j["sentence"] = d.sentence_index + 1;
  j["sent_id"] = sent_id(run.doc, d.sentence_index);
  j["rule"] = d.rule_id;
  j["kind"] = std::string(to_string(d.kind));
  j["confidence"] = std::string(to_string(d.confidence));
  j["tokens"] = d.token_span;
  j["current"] = d.current_analysis;
  j["key"] = d.key;
  j["message"] = d.message;
  json edits = json::array();
  if (d.proposed) {
    for (const AppliedEdit& e :
         describe_plan(d, run.doc.sentences[d.sentence_index])) {
      edits.push_back({{"token", e.token},
                       {"form", e.form},
                       {"head", {e.old_head, e.new_head}},
                       {"deprel", {e.old_deprel, e.new_deprel}},
                       {"upos", {e.old_upos, e.new_upos}}});
    }
  }
  j["proposed"] = std::move(edits);
  return j;
}

int exit_code(const std::vector<FileRun>& runs) {
  int code = kExitClean;
  for (const FileRun& r : runs) {
    if (!r.error.empty()) return kExitError;
    if (r.result.has_high()) code = kExitFindings;
  }
  return code;
}

int cmd_lint(const Options& opt, const RuleConfig& cfg) {
  auto runs = run_files(opt.inputs, cfg, RunMode::kLint);
  std::ostringstream out;
  if (opt.edit_list) {
    for (const FileRun& r : runs) out << proposed_edit_list(r);
  } else if (opt.format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    json files = json::array();
    for (const FileRun& r : runs) {
      json f;
      f["path"] = r.path;
      f["error"] = r.error.empty() ? json() : json(r.error);
      json diags = json::array();
      for (const Diagnostic& d : r.result.diagnostics)
        diags.push_back(diagnostic_json(r, d));
      f["diagnostics"] = std::move(diags);
      files.push_back(std::move(f));
    }
    j["files"] = std::move(files);
    out << j.dump(2) << "\n";
  } else {
    for (const FileRun& r : runs) {
      for (const Diagnostic& d : r.result.diagnostics) {
        out << r.path << ":" << sent_id(r.doc, d.sentence_index) << ":"
            << span_text(d.token_span) << ": " << d.rule_id << " ["
            << to_string(d.confidence) << "] " << d.message << "\n";
        if (d.proposed)
          for (const Edit& e : d.proposed->edits)
            out << "    " << describe(e) << "\n";
      }
    }
  }
  for (const FileRun& r : runs)
    if (!r.error.empty()) std::cerr << "error: " << r.error << "\n";
  std::cout << out.str();
  return exit_code(runs);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot write file");
  out << text;
}

int cmd_rewrite(const Options& opt, const RuleConfig& cfg) {
  if (opt.in_place && !opt.output.empty())
    throw std::invalid_argument("--in-place and --output are exclusive");
  if (opt.in_place && (opt.inputs.empty() ||
                       std::find(opt.inputs.begin(), opt.inputs.end(), "-") !=
                           opt.inputs.end()))
    throw std::invalid_argument("--in-place needs file arguments");
  auto runs = run_files(opt.inputs, cfg,
                        opt.dry_run ? RunMode::kLint : RunMode::kRewrite);
  std::string log;
  for (const FileRun& r : runs) {
    if (!r.error.empty()) continue;
    if (opt.dry_run) {
      log += proposed_edit_list(r);
      continue;
    }
    for (const AppliedEdit& e : r.result.edits) log += edit_line(r.path, r.doc, e);
    for (const Diagnostic& d : r.result.diagnostics)
      if (!d.applied) log += review_line(r.path, r.doc, d);
  }
  int code = kExitClean;
  for (const FileRun& r : runs) {
    if (!r.error.empty()) {
      std::cerr << "error: " << r.error << "\n";
      code = kExitError;
      continue;
    }
    if (opt.dry_run) continue;
    for (const Diagnostic& d : r.result.diagnostics)
      if (!d.applied && code == kExitClean) code = kExitFindings;
    std::string text = serialize_conllu(r.result.document);
    if (opt.in_place) {
      write_file(r.path, text);
    } else if (opt.output.empty()) {
      std::cout << text;
    }
  }
  if (!opt.dry_run && !opt.output.empty() && code != kExitError) {
    std::string text;
    for (const FileRun& r : runs) text += serialize_conllu(r.result.document);
    write_file(opt.output, text);
  }
  if (opt.log.empty()) {
    (opt.dry_run ? std::cout : std::cerr) << log;
  } else {
    write_file(opt.log, log);
  }
  return code;
}

int cmd_stats(const Options& opt, const RuleConfig& cfg) {
  auto runs = run_files(opt.inputs, cfg, RunMode::kLint);
  ConstructionStats stats;
  for (const FileRun& r : runs) {
    if (!r.error.empty()) {
      std::cerr << "error: " << r.error << "\n";
      return kExitError;
    }
    for (const Diagnostic& d : r.result.diagnostics) stats.add(d);
  }
  ReportFormat format = opt.format == "json"  ? ReportFormat::kJson
                        : opt.format == "tsv" ? ReportFormat::kTsv
                                              : ReportFormat::kText;
  std::string report = render_report(stats, format);
  if (opt.output.empty()) {
    std::cout << report;
  } else {
    write_file(opt.output, report);
  }
  return kExitClean;
}

std::vector<std::string> split_words(const std::vector<std::string>& args) {
  std::vector<std::string> words;
  for (const std::string& a : args) {
    std::istringstream in(a);
    for (std::string w; in >> w;) words.push_back(w);
  }
  return words;
}

int cmd_num(const Options& opt) {
  if (!opt.verbalize.empty()) {
    std::vector<std::string> words = verbalize(Decimal::parse(opt.verbalize));
    std::string line;
    for (const std::string& w : words) line += (line.empty() ? "" : " ") + w;
    std::cout << line << "\n";
    return kExitClean;
  }
  if (!opt.roundtrip.empty()) {
    Decimal n = Decimal::parse(opt.roundtrip);
    std::vector<std::string> words = verbalize(n);
    Decimal back = evaluate(parse_number(words));
    std::string line;
    for (const std::string& w : words) line += (line.empty() ? "" : " ") + w;
    std::cout << n.str() << "\t" << line << "\t" << back.str() << "\t"
              << (back == n ? "ok" : "MISMATCH") << "\n";
    return back == n ? kExitClean : kExitFindings;
  }
  std::string text;
  for (const std::string& w : opt.words) text += (text.empty() ? "" : " ") + w;
  if (text.empty()) throw std::invalid_argument("num: give words, --verbalize or --roundtrip");
  NumberTree tree = parse_number(split_number_words(text));
  Sentence sent;
  sent.tokens = number_to_conllu(tree);
  std::string joined;
  for (const std::string& w : tree.tokens) joined += (joined.empty() ? "" : " ") + w;
  sent.comments = {"# text = " + joined, "# value = " + tree.value.str()};
  std::cout << serialize_sentence(sent);
  return kExitClean;
}

int cmd_date(const Options& opt, const RuleConfig& cfg) {
  std::vector<std::string> words = split_words(opt.words);
  Sentence sent = datetime_fragment(words, cfg.lexicons);
  std::string joined;
  for (const std::string& w : words) joined += (joined.empty() ? "" : " ") + w;
  sent.comments = {"# text = " + joined};
  std::cout << serialize_sentence(sent);
  return kExitClean;
}

}  // namespace
}  // namespace mischief

int main(int argc, char** argv) {
  using namespace mischief;
  Options opt;
  CLI::App app{"Lint and rewrite mischievous nominal constructions in CoNLL-U"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", opt.config_path,
                 "Config file (default: ./mischief.conf if present)");
  app.add_option("--lexicon", opt.lexicons, "Override a lexicon: NAME=PATH");
  app.add_option("--numbered-relation", opt.numbered_relation,
                 "nmod:desc, nummod:name or compound/flat");
  app.add_option("--adverbial-subtype", opt.adverbial_subtype, "adv or npmod");

  auto* lint = app.add_subcommand("lint", "Report constructions to review");
  lint->add_option("inputs", opt.inputs, "CoNLL-U files (default: stdin)");
  lint->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
  lint->add_flag("--edits", opt.edit_list,
                 "Print the proposed-edit list instead of diagnostics");

  auto* rewrite = app.add_subcommand("rewrite", "Apply High-confidence fixes");
  rewrite->add_option("inputs", opt.inputs, "CoNLL-U files (default: stdin)");
  rewrite->add_flag("--in-place,-i", opt.in_place, "Overwrite the input files");
  rewrite->add_option("--output,-o", opt.output, "Write all documents here");
  rewrite->add_option("--log", opt.log, "Change log file (default: stderr)");
  rewrite->add_flag("--dry-run", opt.dry_run,
                    "Print the proposed-edit list and write nothing");

  auto* stats = app.add_subcommand("stats", "Construction frequency report");
  stats->add_option("inputs", opt.inputs, "CoNLL-U files (default: stdin)");
  stats->add_option("--format", opt.format)
      ->check(CLI::IsMember({"text", "json", "tsv"}));
  stats->add_option("--output,-o", opt.output, "Report file");

  auto* num = app.add_subcommand("num", "Spelled-out number trees");
  num->add_option("words", opt.words, "Number words");
  num->add_option("--verbalize", opt.verbalize, "Print the words for a value");
  num->add_option("--roundtrip", opt.roundtrip,
                  "Check evaluate(parse(verbalize(VALUE))) == VALUE");

  auto* date = app.add_subcommand("date", "Date and time expression trees");
  date->add_option("words", opt.words, "Pre-tokenized expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitClean : kExitError;
  }

  try {
    RuleConfig cfg = load_config(opt);
    if (*lint) return cmd_lint(opt, cfg);
    if (*rewrite) return cmd_rewrite(opt, cfg);
    if (*stats) return cmd_stats(opt, cfg);
    if (*num) return cmd_num(opt);
    if (*date) return cmd_date(opt, cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
