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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "fixtures.h"

#ifdef MISCHIEF_CLI_PATH

namespace mischief {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int status = -1;
  std::string out;
};

// Runs the CLI with `args`; stderr goes to `err` when given, else is dropped.
CliRun cli(const std::string& args, const fs::path& err = "/dev/null") {
  std::string cmd = std::string("'") + MISCHIEF_CLI_PATH + "' " + args +
                    " 2>'" + err.string() + "'";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;)
    r.out.append(buf, n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string fixture(const std::string& rel) {
  return "'" + (testing::fixture_dir() / rel).string() + "'";
}

fs::path scratch(const std::string& name) {
  return fs::temp_directory_path() / ("mischief_cli_" + name);
}

const char* kFigures[] = {"fig1_appellation",   "fig2a_must_see",
                          "fig2c_fire_breathing", "symphony_no5",
                          "wisconsin_madison",  "date_july31",
                          "time_10pm",          "fig3_number"};

TEST(Cli, LintExitCodes) {
  CliRun bad = cli("lint " + fixture("figures/fig1_appellation.conllu"));
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.out.find("appellation"), std::string::npos);
  CliRun good = cli("lint " + fixture("figures/fig1_appellation.gold.conllu"));
  EXPECT_EQ(good.status, 0);
  EXPECT_TRUE(good.out.empty());
}

TEST(Cli, CorruptInputExitsTwoWithLine) {
  fs::path in = scratch("bad.conllu"), err = scratch("bad.err");
  std::ofstream(in) << "# c\n1\tx\tx\tX\t_\t_\t0\troot\t_\t_\n"
                       "2\ty\ty\tX\t_\t_\t9\tdep\t_\t_\n";
  EXPECT_EQ(cli("lint '" + in.string() + "'", err).status, 2);
  EXPECT_NE(testing::read_file(err).find(":3:"), std::string::npos)
      << testing::read_file(err);
}

TEST(Cli, RewriteMatchesFigureGoldens) {
  for (const char* name : kFigures) {
    std::string base = std::string("figures/") + name;
    CliRun r = cli("rewrite " + fixture(base + ".conllu"));
    EXPECT_EQ(r.status, 0) << name;
    EXPECT_EQ(r.out, testing::read_file(testing::fixture_dir() /
                                        (base + ".gold.conllu")))
        << name;
  }
}

TEST(Cli, RewriteIsIdempotent) {
  fs::path once = scratch("once.conllu"), log = scratch("twice.log");
  EXPECT_EQ(cli("rewrite -o '" + once.string() + "' " +
                fixture("planted/planted.conllu"))
                .status,
            0);
  CliRun twice = cli("rewrite --log '" + log.string() + "' '" + once.string() + "'");
  EXPECT_EQ(twice.status, 0);
  EXPECT_EQ(twice.out, testing::read_file(once));
  EXPECT_TRUE(testing::read_file(log).empty());
}

TEST(Cli, RewriteLogFormat) {
  fs::path log = scratch("fig1.log");
  cli("rewrite --log '" + log.string() + "' " +
      fixture("figures/fig1_appellation.conllu"));
  std::string text = testing::read_file(log);
  ASSERT_FALSE(text.empty());
  std::string first = text.substr(0, text.find('\n'));
  EXPECT_EQ(std::count(first.begin(), first.end(), '\t'), 7) << first;
  EXPECT_NE(first.find(" -> "), std::string::npos);
  EXPECT_NE(first.find("\thigh"), std::string::npos) << first;
}

TEST(Cli, HeuristicFindingsAreLeftForReview) {
  fs::path log = scratch("review.log");
  std::string path = "review/heuristic_only.conllu";
  CliRun r = cli("rewrite --log '" + log.string() + "' " + fixture(path));
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, testing::read_file(testing::fixture_dir() / path));
  std::string text = testing::read_file(log);
  EXPECT_NE(text.find("\treview\t"), std::string::npos) << text;
}

TEST(Cli, DryRunMatchesLintEdits) {
  std::string in = fixture("planted/planted.conllu");
  CliRun lint = cli("lint --edits " + in);
  CliRun dry = cli("rewrite --dry-run " + in);
  EXPECT_FALSE(lint.out.empty());
  EXPECT_EQ(lint.out, dry.out);
}

TEST(Cli, NumberFigure) {
  CliRun r = cli("num eight hundred thirty-five thousand, one hundred and one "
              "point five nine six");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("# value = 835101.596"), std::string::npos) << r.out;
  CliRun v = cli("num --verbalize 101");
  EXPECT_EQ(v.out, "one hundred and one\n");
  CliRun rt = cli("num --roundtrip 835101.596");
  EXPECT_EQ(rt.status, 0);
  EXPECT_NE(rt.out.find("\tok"), std::string::npos);
  EXPECT_EQ(cli("num banana").status, 2);
}

TEST(Cli, DateFragment) {
  CliRun r = cli("date July 31 , 1980 AD");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("2\t31\t31\tNUM"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\t0\troot\t"), std::string::npos);
  EXPECT_EQ(cli("date banana split").status, 2);
}

TEST(Cli, StatsFormats) {
  std::string in = fixture("stats/table2_shapes.conllu");
  CliRun text = cli("stats " + in);
  EXPECT_EQ(text.status, 0);
  EXPECT_EQ(text.out.rfind("construction", 0), 0u);
  EXPECT_NE(text.out.find("General (3)"), std::string::npos);
  CliRun tsv = cli("stats --format tsv " + in);
  EXPECT_NE(tsv.out.find("Appellation\ttitle/profession\t6\t3\t"),
            std::string::npos);
  CliRun json = cli("stats --format json " + in);
  EXPECT_NE(json.out.find("\"schema_version\": 1"), std::string::npos);
}

TEST(Cli, ConfigOptionChangesRelation) {
  CliRun r = cli("--numbered-relation nummod:name rewrite " +
              fixture("figures/symphony_no5.conllu"));
  EXPECT_NE(r.out.find("nummod:name"), std::string::npos) << r.out;
  EXPECT_EQ(cli("--numbered-relation bogus lint " +
                fixture("figures/symphony_no5.conllu"))
                .status,
            2);
}

}  // namespace
}  // namespace mischief

#endif  // MISCHIEF_CLI_PATH
