// Copyright 2026 The maxlab Authors
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

#include "cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "maxlab/io.h"

namespace maxlab::cli {
namespace {

using io::json;

std::string data(const std::string& name) { return std::string(MAXLAB_TEST_DATA_DIR) + "/" + name; }

struct Run {
  int code;
  json report;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "maxlab");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  json report;
  if (!out.str().empty() && out.str()[0] == '{') report = json::parse(out.str());
  return {code, std::move(report), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv("MAXLAB_SEED"); }
  void TearDown() override { unsetenv("MAXLAB_SEED"); }
};

TEST_F(CliTest, ValidateGoodAndBad) {
  const auto ok = invoke({"validate", "--space", data("line3.json")});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_TRUE(ok.report["result"]["valid"].get<bool>());
  EXPECT_FALSE(ok.report["result"]["ultrametric"].get<bool>());
  EXPECT_EQ(ok.report["inputs"]["space"]["content_hash"].get<std::string>().size(), 16u);

  const auto bad = invoke({"validate", "--space", data("bad_triangle.json")});
  EXPECT_EQ(bad.code, kExitInputError);
  EXPECT_FALSE(bad.report["result"]["valid"].get<bool>());
  EXPECT_EQ(bad.report["status"], "input_error");
}

TEST_F(CliTest, CsvSpace) {
  const auto r = invoke({"balls", "--space", data("line3.csv")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.report["result"]["count"], 6);
}

TEST_F(CliTest, MaximalOnLine3) {
  const auto r = invoke({"maximal", "--space", data("line3.json"), "--measure",
                         data("uniform3.json"), "--fn", data("ind2.json")});
  EXPECT_EQ(r.code, kExitOk);
  const auto& pts = r.report["result"]["points"];
  EXPECT_EQ(pts[0]["centered"], "1/3");
  EXPECT_EQ(pts[1]["centered"], "1/3");
  EXPECT_EQ(pts[1]["noncentered"], "1/2");
  EXPECT_EQ(pts[2]["noncentered"], "1");
  const auto expect_equal =
      invoke({"maximal", "--space", data("line3.json"), "--measure", data("uniform3.json"), "--fn",
              data("ind2.json"), "--expect", "equal"});
  EXPECT_EQ(expect_equal.code, kExitFalsified);
  EXPECT_EQ(expect_equal.report["status"], "falsified");
}

TEST_F(CliTest, CoincideModes) {
  const auto exact =
      invoke({"coincide", "--space", data("line3.json"), "--measure", data("uniform3.json")});
  EXPECT_EQ(exact.code, kExitOk);
  EXPECT_EQ(exact.report["result"]["verdict"], "distinct");
  EXPECT_TRUE(exact.report["result"]["verified"].get<bool>());

  const auto eq = invoke({"coincide", "--space", data("eq3.json"), "--measure",
                          data("uniform3.json"), "--expect", "equal"});
  EXPECT_EQ(eq.code, kExitOk);
  EXPECT_EQ(eq.report["result"]["verdict"], "equal");

  const auto rnd =
      invoke({"coincide", "--space", data("eq3.json"), "--measure", data("uniform3.json"), "--mode",
              "randomized", "--trials", "50", "--seed", "3", "--expect", "distinct"});
  EXPECT_EQ(rnd.code, kExitFalsified);
  EXPECT_EQ(rnd.report["seed"], 3);
  EXPECT_EQ(rnd.report["seed_source"], "flag");

  const auto bad_mode = invoke({"coincide", "--space", data("eq3.json"), "--measure",
                                data("uniform3.json"), "--mode", "fuzzy"});
  EXPECT_EQ(bad_mode.code, kExitInputError);
}

TEST_F(CliTest, SeedFromEnvironment) {
  setenv("MAXLAB_SEED", "77", 1);
  const auto r = invoke({"coincide", "--space", data("eq3.json"), "--measure",
                         data("uniform3.json"), "--mode", "randomized", "--trials", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.report["seed"], 77);
  EXPECT_EQ(r.report["seed_source"], "MAXLAB_SEED");
  setenv("MAXLAB_SEED", "seven", 1);
  EXPECT_EQ(invoke({"balls", "--space", data("eq3.json")}).code, kExitInputError);
}

TEST_F(CliTest, WitnessAndBallInfimum) {
  const auto w = invoke({"witness", "--space", data("line3.json")});
  EXPECT_EQ(w.code, kExitOk);
  EXPECT_EQ(w.report["result"]["witness"]["gap"], "1/6");
  EXPECT_TRUE(w.report["result"]["verified"].get<bool>());
  EXPECT_EQ(invoke({"witness", "--space", data("eq3.json")}).code, kExitFalsified);
  EXPECT_EQ(invoke({"witness", "--space", data("eq3.json"), "--expect", "equal"}).code, kExitOk);

  const auto l =
      invoke({"ball-infimum", "--space", data("line3.json"), "--measure", data("uniform3.json")});
  EXPECT_EQ(l.code, kExitOk);
  const auto le = invoke({"ball-infimum", "--space", data("eq3.json"), "--measure",
                          data("uniform3.json"), "--expect", "equal"});
  EXPECT_EQ(le.code, kExitOk);
}

TEST_F(CliTest, LscAndGrid) {
  const auto l = invoke({"lsc", "--space", data("line3.json"), "--measure", data("uniform3.json"),
                         "--nu", data("lsc_line3.json")});
  EXPECT_EQ(l.code, kExitOk) << l.err;
  const auto g = invoke({"demo-grid", "--n", "10"});
  EXPECT_EQ(g.code, kExitOk);
  EXPECT_EQ(g.report["result"]["gap"], "11/28");
  EXPECT_EQ(invoke({"demo-grid", "--n", "1"}).code, kExitInputError);
}

TEST_F(CliTest, GenWritesFilesThatLoadBack) {
  const auto dir = std::filesystem::temp_directory_path() / "maxlab_cli_test";
  std::filesystem::create_directories(dir);
  const auto space = (dir / "space.json").string();
  const auto measure = (dir / "measure.json").string();
  for (const std::string family : {"ultrametric", "taxicab", "graph"}) {
    const auto r = invoke({"gen", "--family", family, "--n", "6", "--seed", "4", "--space-out",
                           space, "--measure-out", measure});
    ASSERT_EQ(r.code, kExitOk) << family << r.err;
    EXPECT_EQ(r.report["result"]["space"], json::parse(io::read_file(space)));
    const auto m = invoke({"maximal", "--space", space, "--measure", measure, "--fn", measure});
    EXPECT_EQ(m.code, kExitOk) << family << m.err;
    if (family == "ultrametric") {
      EXPECT_TRUE(m.report["result"]["coincide"].get<bool>());
    }
  }
  EXPECT_EQ(invoke({"gen", "--family", "tree"}).code, kExitInputError);
  std::filesystem::remove_all(dir);
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(invoke({}).code, kExitInputError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(invoke({"balls"}).code, kExitInputError);
  EXPECT_EQ(invoke({"balls", "--space", "/nonexistent.json"}).code, kExitInputError);
  EXPECT_EQ(invoke({"maximal", "--space", data("line3.json"), "--measure", data("ind2.json"),
                    "--fn", data("ind2.json")})
                .code,
            kExitInputError);
  EXPECT_EQ(invoke({"maximal", "--space", data("bad_triangle.json"), "--measure",
                    data("uniform3.json"), "--fn", data("ind2.json")})
                .code,
            kExitInputError);
}

}  // namespace
}  // namespace maxlab::cli
