// Copyright 2026 The domsolve Authors
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

// Runs the built binary end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code = -1;
  std::string out;
};

// stderr is discarded; `env` is prepended to the command line.
Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + DOMSOLVE_CLI_PATH + " " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  for (std::size_t got; (got = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> f;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) f.push_back(cell);
    rows.push_back(f);
  }
  return rows;
}

std::vector<std::string> column(const std::string& text, const std::string& name) {
  const auto rows = csv(text);
  std::vector<std::string> out;
  if (rows.empty()) return out;
  const auto it = std::find(rows[0].begin(), rows[0].end(), name);
  const auto k = static_cast<std::size_t>(it - rows[0].begin());
  for (std::size_t r = 1; r < rows.size(); ++r) out.push_back(rows[r].at(k));
  return out;
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("domsolve_cli_" + std::to_string(getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

TEST(CliExact, Pi2n) {
  const auto r = run("exact pi2n --n 1..5");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(column(r.out, "exact"),
            (std::vector<std::string>{"1", "3/4", "5/8", "35/64", "63/128"}));
  EXPECT_EQ(column(r.out, "decimal")[1], "0.75");
}

TEST(CliExact, MeanIterationsAndStirling) {
  const auto mean = run("exact meanI2n --n 2");
  ASSERT_EQ(mean.code, 0);
  EXPECT_EQ(column(mean.out, "exact"), (std::vector<std::string>{"5/3"}));
  const auto st = run("exact stirling --n 4");
  ASSERT_EQ(st.code, 0);
  EXPECT_EQ(column(st.out, "exact"), (std::vector<std::string>{"6", "11", "6", "1"}));
}

TEST(CliExact, JsonFormat) {
  const auto r = run("exact distI2n --n 3 --format json");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0].at("exact"), "2/15");
  EXPECT_EQ(j[1].at("k"), 2);
}

TEST(CliExact, RangeErrors) {
  EXPECT_EQ(run("exact pi2n --n 0").code, 2);
  EXPECT_EQ(run("exact pi2n --n 5..3").code, 2);
  EXPECT_EQ(run("exact pi2n --n x").code, 2);
  EXPECT_EQ(run("exact pi2n --n 5000").code, 3);
  EXPECT_EQ(run("exact pi2n --m 3").code, 2);
  EXPECT_EQ(run("exact nosuch").code, 2);
}

TEST(CliEnumerate, TableRowAndTwoByThree) {
  const auto uc = run("enumerate uc3xn --n 6");
  ASSERT_EQ(uc.code, 0);
  const auto counts = column(uc.out, "count");
  ASSERT_EQ(counts.size(), 6u);
  EXPECT_EQ(counts.back(), "31711");
  long total = 0;
  for (const auto& c : counts) total += std::stol(c);
  EXPECT_EQ(total, 518400);

  const auto full = run("enumerate full2xn --n 3");
  ASSERT_EQ(full.code, 0);
  const auto rows = csv(full.out);
  ASSERT_GT(rows.size(), 1u);
  EXPECT_EQ(rows[1][1], "pi");
  EXPECT_EQ(rows[1][3], "5/8");

  const auto pr = run("enumerate pointrat2x2");
  ASSERT_EQ(pr.code, 0);
  EXPECT_EQ(column(pr.out, "exact"), (std::vector<std::string>{"3/4"}));
  EXPECT_EQ(run("enumerate full2xn --n 9").code, 3);
}

TEST(CliSimulate, CsvAndThreadInvariance) {
  const std::string args = "simulate --metric survivor-dist --m 2 --n 3..4 --samples 3000 --seed 9";
  const auto one = run(args + " --threads 1");
  const auto four = run(args + " --threads 4");
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
  const auto rows = csv(one.out);
  EXPECT_EQ(rows[0].size(), 11u);
  EXPECT_EQ(rows.size(), 1u + 3 + 4);
  EXPECT_EQ(rows[1][0], "survivor-dist:1");
  EXPECT_EQ(rows[1][10], "9:0");
}

TEST(CliSimulate, MixedPipelineWithCrra) {
  const auto r = run(
      "simulate --metric mixed-pi --class baseline --dist uniform --alpha 0.41 --m 3 --n 3 "
      "--samples 500 --seed 1 --format json");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0].at("alpha"), "0.41");
  EXPECT_GT(j[0].at("estimate").get<double>(), 0.0);
}

TEST(CliSimulate, UsageErrors) {
  EXPECT_EQ(run("simulate --metric nope").code, 2);
  EXPECT_EQ(run("simulate --bogus 1").code, 2);
  EXPECT_EQ(run("simulate --class symmetric --m 2 --n 3 --samples 10").code, 2);
  EXPECT_EQ(run("simulate --alpha 2 --samples 10").code, 2);
  EXPECT_EQ(run("simulate --samples 0").code, 2);
  EXPECT_EQ(run("simulate --seed -4 --samples 10").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(CliConfig, FlagsWinOverConfig) {
  TempDir dir;
  const fs::path cfg = dir.path() / "cfg.json";
  std::ofstream(cfg) << R"({"samples": 100, "seed": "5:1", "m": [2, 3]})";
  const auto r = run("simulate --metric pi --n 4 --samples 200 --config " + cfg.string());
  ASSERT_EQ(r.code, 0);
  const auto rows = csv(r.out);
  ASSERT_EQ(rows.size(), 3u);  // m = 2, 3
  EXPECT_EQ(rows[1][6], "200");
  EXPECT_EQ(rows[1][10], "5:1");
  EXPECT_EQ(rows[2][2], "3");

  std::ofstream(dir.path() / "bad.json") << R"({"no-such-flag": 1})";
  EXPECT_EQ(run("simulate --config " + (dir.path() / "bad.json").string()).code, 2);
  EXPECT_EQ(run("simulate --config " + (dir.path() / "missing.json").string()).code, 2);
}

TEST(CliOutput, EnvironmentSetsOutputDirectory) {
  TempDir dir;
  const auto r = run("exact pi2n --n 3 --output sub/pi.csv",
                     "DOMSOLVE_OUTPUT_DIR=" + dir.path().string());
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(dir.path() / "sub" / "pi.csv");
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(column(text.str(), "exact"), (std::vector<std::string>{"5/8"}));
}

TEST(CliGame, GenerateLoadTraceRationalize) {
  TempDir dir;
  const fs::path file = dir.path() / "g.json";
  ASSERT_EQ(run("game generate --m 3 --n 4 --dist uniform --seed 11 --output " + file.string())
                .code,
            0);
  std::ifstream in(file);
  const json g = json::parse(in);
  EXPECT_EQ(g.at("type"), "cardinal");

  const auto loaded = run("game load --input " + file.string());
  ASSERT_EQ(loaded.code, 0);
  EXPECT_EQ(json::parse(loaded.out), g);

  const auto trace = run("game trace --input " + file.string());
  ASSERT_EQ(trace.code, 0);
  const json t = json::parse(trace.out);
  EXPECT_TRUE(t.contains("rounds"));
  EXPECT_EQ(t.at("iterations").get<int>(), static_cast<int>(t.at("rounds").size()));

  const auto rat = run("game rationalize --input " + file.string());
  ASSERT_EQ(rat.code, 0);
  EXPECT_TRUE(json::parse(rat.out).contains("point_rationalizable"));

  EXPECT_EQ(run("game generate --m 3 --n 4 --seed 11").out,
            run("game generate --m 3 --n 4 --seed 11").out);
  EXPECT_EQ(run("game load --input " + (dir.path() / "none.json").string()).code, 2);
}

}  // namespace
