// Copyright 2026 The almt Authors.
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

// Runs the built almt binary end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("almt_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  Outcome run(const std::string& args) {
    const fs::path out = dir_ / "stdout";
    const fs::path err = dir_ / "stderr";
    const std::string cmd = std::string(ALMT_CLI_PATH) + " " + args + " >" + out.string() +
                            " 2>" + err.string();
    const int raw = std::system(cmd.c_str());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
  }

  fs::path dir_;
};

nlohmann::json parse(const Outcome& r) { return nlohmann::json::parse(r.out); }

TEST_F(CliTest, TreeTwoLeaves) {
  const Outcome r = run("tree " + file("w.txt", "1.2\n0.3"));
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = parse(r);
  EXPECT_NEAR(j["alpha"].get<double>(), 2.2, 1e-12);
  EXPECT_EQ(j["depths"], nlohmann::json::parse("[1,1]"));
  EXPECT_EQ(j["parent_array"], nlohmann::json::parse("[-1,0,0]"));
  EXPECT_EQ(j["n"], 2);
  EXPECT_TRUE(j.contains("instrumentation"));
}

TEST_F(CliTest, TreeIntegerWeights) {
  const Outcome r = run("tree --int " + file("w.txt", "4\n5\n2\n2\n2\n1\n2\n3\n6\n4"));
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(parse(r)["alpha"], 8);
  EXPECT_EQ(parse(r)["d"], 6);
}

TEST_F(CliTest, TreeAlgorithmsAgree) {
  const std::string w = file("w.txt", "0.7,1.25,-0.5\n3.9\n0.7\n2.01\n");
  const Outcome a = run("tree --algo new " + w);
  const Outcome b = run("tree --algo sorted " + w);
  ASSERT_EQ(a.status, 0) << a.err;
  ASSERT_EQ(b.status, 0) << b.err;
  EXPECT_EQ(parse(a)["alpha"], parse(b)["alpha"]);
  EXPECT_EQ(parse(a)["offset_b"], parse(b)["offset_b"]);
  EXPECT_EQ(parse(a)["algo"], "new");
}

TEST_F(CliTest, TreeDumpsLevelTree) {
  const Outcome r = run("tree --dump-level-tree " + file("w.txt", "3\n3\n3\n3"));
  ASSERT_EQ(r.status, 0) << r.err;
  const auto lt = parse(r)["level_tree"];
  EXPECT_EQ(lt["n"], 4);
  EXPECT_EQ(lt["journal_depth"], 0);
}

TEST_F(CliTest, TreeInputErrors) {
  EXPECT_EQ(run("tree " + file("e.txt", "")).status, 2);
  const Outcome bad = run("tree " + file("b.txt", "1\n2\nx\n"));
  EXPECT_EQ(bad.status, 2);
  EXPECT_NE(bad.err.find("line 3"), std::string::npos) << bad.err;
  EXPECT_EQ(run("tree --int " + file("f.txt", "1.5\n")).status, 2);
  EXPECT_EQ(run("tree " + (dir_ / "missing").string()).status, 2);
  EXPECT_EQ(run("tree --algo fastest " + file("w.txt", "1")).status, 2);
}

TEST_F(CliTest, CodeAndStatsOnTwoSymbols) {
  const std::string book = (dir_ / "cb.json").string();
  ASSERT_EQ(run("code " + file("s.txt", "aab") + " --out " + book).status, 0);
  const auto cb = nlohmann::json::parse(slurp(book));
  ASSERT_EQ(cb.size(), 2u);
  EXPECT_EQ(cb[0]["label"], "a");
  EXPECT_EQ(cb[0]["codeword"], "0");
  EXPECT_EQ(cb[1]["codeword"], "1");

  const Outcome r = run("stats --code " + book + " " + file("t.txt", "aab"));
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = parse(r);
  EXPECT_DOUBLE_EQ(j["avg_len"].get<double>(), 1.0);
  EXPECT_NEAR(j["relative_entropy"].get<double>(), 0.0, 1e-15);
  const double h = -(2.0 / 3) * std::log2(2.0 / 3) - (1.0 / 3) * std::log2(1.0 / 3);
  EXPECT_NEAR(j["entropy"].get<double>(), h, 1e-12);
  EXPECT_NEAR(j["excess"].get<double>(), 1.0 - h, 1e-12);
  EXPECT_NEAR(j["bound"].get<double>(), 1.0 + std::log2(2.0 / 3), 1e-12);
  EXPECT_LE(j["excess"].get<double>(), j["bound"].get<double>() + 1e-9);
}

TEST_F(CliTest, StatsPointMassTarget) {
  const std::string book = (dir_ / "cb.json").string();
  ASSERT_EQ(run("code " + file("s.txt", "ab") + " --out " + book).status, 0);
  const Outcome r = run("stats --code " + book + " " + file("t.txt", "aaaa"));
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = parse(r);
  EXPECT_EQ(j["avg_len"], 1.0);
  EXPECT_EQ(j["relative_entropy"], 1.0);
  EXPECT_EQ(j["entropy"], 0.0);
}

TEST_F(CliTest, StatsUnknownSymbol) {
  const std::string book = (dir_ / "cb.json").string();
  ASSERT_EQ(run("code " + file("s.txt", "ab") + " --out " + book).status, 0);
  const Outcome r = run("stats --code " + book + " " + file("t.txt", "abz"));
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("'z'"), std::string::npos) << r.err;
}

TEST_F(CliTest, SmoothedCodeCoversAllBytes) {
  const std::string book = (dir_ / "cb.json").string();
  ASSERT_EQ(run("code --smoothing add_one " + file("s.txt", "ab") + " --out " + book).status, 0);
  const auto cb = nlohmann::json::parse(slurp(book));
  EXPECT_EQ(cb.size(), 256u);
  EXPECT_EQ(cb[0]["label"], "\\x00");
  const Outcome r = run("stats --code " + book + " " + file("t.txt", std::string("abz\0\xff", 5)));
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_LE(parse(r)["excess"].get<double>(), parse(r)["bound"].get<double>() + 1e-9);
}

TEST_F(CliTest, CsvCounts) {
  const std::string book = (dir_ / "cb.json").string();
  const std::string counts = file("c.csv", "label,count\nx,2\nw,1\ny,1\nq,0\n");
  ASSERT_EQ(run("code --csv " + counts + " --out " + book).status, 0);
  const auto cb = nlohmann::json::parse(slurp(book));
  ASSERT_EQ(cb.size(), 3u);
  EXPECT_EQ(cb[0]["label"], "w");
  EXPECT_EQ(run("code --csv " + file("d.csv", "x,1\nx,2\n")).status, 2);
  EXPECT_EQ(run("code --csv " + file("z.csv", "x,0\n")).status, 2);
}

TEST_F(CliTest, BenchIsDeterministicWithoutTiming) {
  const std::string args = "bench --n 2000,4000 --d 1,2,4 --trials 3 --seed 7 --no-timing";
  const Outcome a = run(args);
  const Outcome b = run(args + " --threads 3");
  ASSERT_EQ(a.status, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::istringstream lines(a.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header.rfind("n,d,algo,wall_ns,sets,undos,finds,unions", 0), 0u);
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, 2 * 3 * 3 * 2);
}

TEST_F(CliTest, BenchRejectsBadConfig) {
  EXPECT_EQ(run("bench --n 10 --d 11").status, 2);
  EXPECT_EQ(run("bench --n 10 --d 0").status, 2);
}

}  // namespace
