// Copyright 2026 The Leroy Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "leroy/parser.hpp"

namespace fs = std::filesystem;

namespace leroy {
namespace {

using testing::data_dir;
using testing::run_command;
using testing::slurp;

fs::path scratch(const std::string &name) {
  fs::path p = fs::path(LEROY_SCRATCH) / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int learn_cli(const fs::path &corpus, const fs::path &out, const std::string &extra = "",
              const std::string &env = "") {
  std::string cmd = env + " '" LEROY_CLI "' learn --corpus '" + corpus.string() + "' --out '" +
                    out.string() + "' " + extra + " > /dev/null 2> '" + (out / "stderr.txt").string() + "'";
  return run_command(cmd);
}

std::map<std::string, std::string> tree(const fs::path &dir) {
  std::map<std::string, std::string> files;
  for (const auto &e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file() && e.path().filename() != "stderr.txt")
      files[fs::relative(e.path(), dir).string()] = slurp(e.path());
  return files;
}

TEST(Cli, PlantedCorpusReportIsRecomputable) {
  auto out = scratch("planted");
  ASSERT_EQ(learn_cli(data_dir() / "planted", out, "--oracle-check"), 0) << slurp(out / "stderr.txt");
  auto report = nlohmann::json::parse(slurp(out / "report.json"));
  ASSERT_EQ(report["abstractions"].size(), 1u);
  EXPECT_EQ(report["abstractions"][0]["sites"], 3);
  EXPECT_EQ(report["oracle_check"]["mismatches"], 0);
  for (const char *key : {"original_nodes", "rewritten_nodes", "rewritten_plus_library_nodes",
                          "compression_ratio", "library_growth_pct", "pruned",
                          "rejected_call_sites"})
    EXPECT_TRUE(report.contains(key)) << key;

  std::size_t original = 0, rewritten = 0;
  for (const auto &e : fs::directory_iterator(data_dir() / "planted")) {
    if (e.path().extension() != ".py") continue;
    original += ast_size(parse_program(slurp(e.path())));
    Program emitted = parse_program(slurp(out / e.path().filename()));
    for (const auto &s : emitted.body)
      if (!(s.kind == StmtKind::FunctionDef && s.name.rfind("_leroy_fn", 0) == 0))
        rewritten += ast_size(s);
  }
  std::size_t library = ast_size(parse_program(slurp(out / "library.py")));
  EXPECT_EQ(report["original_nodes"], original);
  EXPECT_EQ(report["rewritten_nodes"], rewritten);
  EXPECT_EQ(report["rewritten_plus_library_nodes"], rewritten + library);
  EXPECT_DOUBLE_EQ(report["compression_ratio"].get<double>(), double(original) / double(rewritten));
}

TEST(Cli, EmptyCorpusExitsOne) {
  auto corpus = scratch("empty_in");
  auto out = scratch("empty_out");
  EXPECT_EQ(learn_cli(corpus, out), 1);
  EXPECT_NE(slurp(out / "stderr.txt").find("no programs found"), std::string::npos);
}

TEST(Cli, ParseErrorExitsOneWithLocation) {
  auto corpus = scratch("bad_in");
  std::ofstream(corpus / "bad.py") << "x = 1\ny = 2 + * 3\n";
  auto out = scratch("bad_out");
  EXPECT_EQ(learn_cli(corpus, out), 1);
  auto err = slurp(out / "stderr.txt");
  EXPECT_NE(err.find("bad.py:2:"), std::string::npos) << err;
}

TEST(Cli, HugeThresholdLeavesCorpusAlone) {
  auto out = scratch("huge");
  ASSERT_EQ(learn_cli(data_dir() / "planted", out, "--min-size 1000000"), 0);
  auto report = nlohmann::json::parse(slurp(out / "report.json"));
  EXPECT_TRUE(report["abstractions"].empty());
  EXPECT_EQ(report["compression_ratio"], 1.0);
  EXPECT_EQ(slurp(out / "library.py"), "");
  EXPECT_EQ(parse_program(slurp(out / "p1_constants.py")),
            parse_program(slurp(data_dir() / "planted" / "p1_constants.py")));
}

TEST(Cli, OutputIsByteIdenticalAcrossRunsAndThreadCounts) {
  auto a = scratch("det_a");
  auto b = scratch("det_b");
  ASSERT_EQ(learn_cli(data_dir() / "scale", a, "--dump-sexpr", "LEROY_THREADS=1"), 0);
  ASSERT_EQ(learn_cli(data_dir() / "scale", b, "--dump-sexpr", "LEROY_THREADS=4"), 0);
  auto ta = tree(a);
  EXPECT_GT(ta.size(), 122u);
  EXPECT_EQ(ta, tree(b));
}

}  // namespace
}  // namespace leroy
