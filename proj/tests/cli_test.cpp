// Copyright 2026 The pgjk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "pgjk/cli.hpp"

namespace pgjk {
namespace {

namespace fs = std::filesystem;

const std::string kGames = std::string(PGJK_SOURCE_DIR) + "/data/games/";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "pgjk");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_path(const std::string& name) {
  return fs::temp_directory_path() / ("pgjk_cli_test_" + name);
}

fs::path scratch_file(const std::string& name, const std::string& contents) {
  const fs::path path = scratch_path(name);
  std::ofstream(path, std::ios::binary) << contents;
  return path;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(Analyze, ExampleGameTable) {
  const Result r = run_cli({"analyze", kGames + "example33.json"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(r.err.empty());
  EXPECT_TRUE(contains(r.out, "1       6                5                5/12 (0.4167)"));
  EXPECT_TRUE(contains(r.out, "2       5                4                1/3 (0.3333)"));
  EXPECT_TRUE(contains(r.out, "3       4                3                1/4 (0.25)"));
  EXPECT_TRUE(contains(r.out, "potential     6\n"));
  EXPECT_TRUE(contains(r.out, "lambda_total  15\n"));
}

TEST(Analyze, ExampleGameMachine) {
  const Result r = run_cli({"analyze", kGames + "example33.json", "--format", "machine"});
  ASSERT_EQ(r.code, cli::kOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("command"), "analyze");
  const auto& reports = doc.at("reports");
  ASSERT_EQ(reports.size(), 3u);
  EXPECT_EQ(reports[0].at("values"), nlohmann::json({"6", "5", "4"}));
  EXPECT_EQ(reports[1].at("values"), nlohmann::json({"5", "4", "3"}));
  EXPECT_EQ(reports[2].at("values"), nlohmann::json({"5/12", "1/3", "1/4"}));
  EXPECT_EQ(doc.at("potential"), "6");
  EXPECT_EQ(doc.at("lambda_total"), "15");
  EXPECT_FALSE(contains(r.out, "51/18"));
  EXPECT_FALSE(contains(r.out, "0.4167"));
}

TEST(Analyze, MachineOutputIsDeterministic) {
  const Result a = run_cli({"analyze", kGames + "example33.json", "--format", "machine"});
  const Result b = run_cli({"analyze", kGames + "example33.json", "--format", "machine"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Analyze, TrivialGameKeepsRawValues) {
  const Result r = run_cli({"analyze", kGames + "trivial.json"});
  EXPECT_EQ(r.code, cli::kDomainError);
  EXPECT_TRUE(contains(r.out, "1       0                0"));
  EXPECT_TRUE(contains(r.err, "TrivialGame"));
}

TEST(Analyze, SimpleAndTuGames) {
  const Result simple = run_cli({"analyze", kGames + "weighted_simple.json", "--format", "machine"});
  ASSERT_EQ(simple.code, cli::kOk);
  const auto doc = nlohmann::json::parse(simple.out);
  EXPECT_EQ(doc.at("reports")[0].at("variant"), "raw_pgi");
  EXPECT_EQ(doc.at("reports")[0].at("values"), nlohmann::json({"1", "1", "1"}));

  const fs::path tu = scratch_file(
      "nonmonotone.json",
      R"({"kind": "tu", "n": 3, "worth": {"1": "3", "2": "0", "3": "0", "1,2": "3/2",
          "1,3": "3/2", "2,3": "3/2", "1,2,3": "13/5"}})");
  const Result mcc = run_cli({"analyze", tu.string(), "--format", "machine"});
  const Result rgc = run_cli({"analyze", tu.string(), "--format", "machine", "--family", "rgc"});
  ASSERT_EQ(mcc.code, cli::kOk);
  ASSERT_EQ(rgc.code, cli::kOk);
  EXPECT_EQ(nlohmann::json::parse(mcc.out).at("reports")[0].at("values"),
            nlohmann::json({"28/5", "41/10", "41/10"}));
  EXPECT_EQ(nlohmann::json::parse(rgc.out).at("reports")[0].at("values"),
            nlohmann::json({"3", "3/2", "3/2"}));
  fs::remove(tu);
}

TEST(Mcv, ExampleGame) {
  const Result r = run_cli({"mcv", kGames + "example33.json", "--oracle"});
  ASSERT_EQ(r.code, cli::kOk);
  for (const char* row : {"(1,1,2)  1", "(1,2,0)  1", "(2,0,1)  1", "(2,1,0)  1", "(2,2,2)  2"}) {
    EXPECT_TRUE(contains(r.out, row)) << row;
  }
  EXPECT_LT(r.out.find("(1,1,2)"), r.out.find("(2,2,2)"));
}

TEST(Mcv, EmptyListing) {
  const Result r = run_cli({"mcv", kGames + "trivial.json"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "no minimal critical vectors\n");
}

TEST(Potential, ExampleGame) {
  const Result r = run_cli({"potential", kGames + "example33.json", "--format", "machine"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(contains(r.out, "\"6\""));
}

TEST(Average, ExampleGameMachine) {
  const Result r = run_cli({"average", kGames + "example33.json", "--format", "machine"});
  ASSERT_EQ(r.code, cli::kOk);
  for (const char* worth : {"\"1/2\"", "\"5/18\"", "\"1/6\"", "\"2/3\""}) {
    EXPECT_TRUE(contains(r.out, worth)) << worth;
  }
  EXPECT_TRUE(contains(r.out, "\"17/6\""));
  EXPECT_TRUE(contains(r.out, "\"equal_after_normalization\": false"));
}

TEST(Merge, MergeableAndNot) {
  const fs::path a = scratch_file("u1.json", R"({"kind": "jk", "n": 3, "j": 2, "k": 2,
      "table": [0, 0, 0, 0, 0, 0, 1, 1]})");
  const fs::path b = scratch_file("u2.json", R"({"kind": "jk", "n": 3, "j": 2, "k": 2,
      "table": [0, 0, 0, 1, 0, 0, 0, 1]})");
  const Result yes = run_cli({"merge", a.string(), b.string()});
  EXPECT_EQ(yes.code, cli::kOk);
  EXPECT_TRUE(contains(yes.out, "mergeable"));
  EXPECT_FALSE(contains(yes.out, "not mergeable"));
  const Result no = run_cli({"merge", a.string(), a.string(), "--format", "machine"});
  EXPECT_EQ(no.code, cli::kOk);
  EXPECT_TRUE(contains(no.out, "C1_shared_mcv"));
  const Result a4 = run_cli({"axioms", a.string(), b.string()});
  EXPECT_EQ(a4.code, cli::kOk);
  EXPECT_TRUE(contains(a4.out, "A4     pass"));
  fs::remove(a);
  fs::remove(b);
}

TEST(Embed, RoundTripMatchesDirectComputation) {
  const fs::path out = scratch_path("embedded.json");
  const Result r = run_cli({"embed", kGames + "weighted_simple.json", "--output", out.string()});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(r.out.empty());
  const Result direct = run_cli({"analyze", kGames + "weighted_simple.json", "--format", "machine"});
  const Result embedded = run_cli({"analyze", out.string(), "--format", "machine"});
  ASSERT_EQ(embedded.code, cli::kOk);
  EXPECT_EQ(nlohmann::json::parse(embedded.out).at("reports")[0].at("values"),
            nlohmann::json::parse(direct.out).at("reports")[0].at("values"));
  fs::remove(out);
  const Result bad = run_cli({"embed", kGames + "example33.json"});
  EXPECT_EQ(bad.code, cli::kDomainError);
  EXPECT_TRUE(contains(bad.err, "NotTwoLevelInput"));
}

TEST(ExitCodes, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, cli::kUsageError);
  EXPECT_EQ(run_cli({"frobnicate", "x.json"}).code, cli::kUsageError);
  EXPECT_EQ(run_cli({"merge", kGames + "example33.json"}).code, cli::kUsageError);
  EXPECT_EQ(run_cli({"analyze", kGames + "example33.json", "--format", "xml"}).code,
            cli::kUsageError);
  EXPECT_EQ(run_cli({"analyze"}).code, cli::kUsageError);
}

TEST(ExitCodes, DomainErrors) {
  const Result missing = run_cli({"analyze", "/nonexistent.json"});
  EXPECT_EQ(missing.code, cli::kDomainError);
  EXPECT_TRUE(contains(missing.err, "ParseError"));
  const Result cap = run_cli({"analyze", kGames + "example33.json", "--cap", "8"});
  EXPECT_EQ(cap.code, cli::kDomainError);
  EXPECT_TRUE(contains(cap.err, "CapExceeded"));
  const fs::path bad = scratch_file("nonmonotone_jk.json",
                                    R"({"kind": "jk", "n": 2, "j": 2, "k": 2, "table": [0, 1, 0, 0]})");
  const Result invalid = run_cli({"mcv", bad.string()});
  EXPECT_EQ(invalid.code, cli::kDomainError);
  EXPECT_TRUE(contains(invalid.err, "MonotonicityViolation"));
  fs::remove(bad);
}

}  // namespace
}  // namespace pgjk
