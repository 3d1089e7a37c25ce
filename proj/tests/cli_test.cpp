// Copyright 2026 The reid Authors
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int exit_code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(REID_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("reid_cli_test_" + std::string(::testing::UnitTest::GetInstance()
                                               ->current_test_info()
                                               ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  fs::path dir_;
};

const std::string kFixtures = REID_FIXTURE_DIR;

TEST_F(CliTest, AssessSixRespondents) {
  const CliRun r = run_cli("assess --config " + kFixtures + "/six_respondents.json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("Age + Gender"), std::string::npos);
  EXPECT_NE(r.out.find("0.0400"), std::string::npos);
}

TEST_F(CliTest, JsonOutputIsDeterministic) {
  const std::string args = "assess --config " + kFixtures + "/six_respondents.json --format json";
  const CliRun a = run_cli(args);
  const CliRun b = run_cli(args);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, UnknownQiVariableExitsTwo) {
  const fs::path cfg = write("bad.json", R"({
    "input": ")" + kFixtures + R"(/six_respondents.csv",
    "missing_tokens": ["", "."],
    "schema": [{"name": "Age", "kind": "integer"}, {"name": "Gender"}],
    "quasi_identifiers": [["Age", "Income"]],
    "population_size": 100})");
  EXPECT_EQ(run_cli("assess --config " + cfg.string()).exit_code, 2);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("assess").exit_code, 2);
  EXPECT_EQ(run_cli("assess --config /nonexistent.json").exit_code, 2);
  EXPECT_EQ(run_cli("assess --config " + kFixtures + "/six_respondents.json --format xml").exit_code, 2);
  EXPECT_EQ(run_cli("--help").exit_code, 0);
}

TEST_F(CliTest, ZeroDrawsRejected) {
  const fs::path cfg = write("sim.json", R"({"simulation": {
    "population": {"size": 100, "variables": [{"name": "a", "uniform": 3}]},
    "sampling_fraction": 0.5, "draws": 0}})");
  EXPECT_EQ(run_cli("simulate --config " + cfg.string()).exit_code, 2);
}

TEST_F(CliTest, SimulateSeedOverride) {
  const fs::path cfg = write("sim.json", R"({"simulation": {
    "population": {"size": 2000, "variables": [{"name": "a", "uniform": 10},
                                               {"name": "b", "uniform": 10}]},
    "sampling_fraction": 0.2, "replicates": 2, "draws": 2000}})");
  const CliRun a = run_cli("simulate --format json --seed 4 --config " + cfg.string());
  const CliRun b = run_cli("simulate --format json --seed 4 --threads 2 --config " + cfg.string());
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, PrepMatchesExpectedCsv) {
  const fs::path out = dir_ / "prepared.csv";
  const CliRun r =
      run_cli("prep --config " + kFixtures + "/panel/prep.json --output " + out.string());
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(slurp(out), slurp(kFixtures + "/panel/expected_prepared.csv"));
}

TEST_F(CliTest, MissingInputIsRuntimeError) {
  const fs::path cfg = write("io.json", R"({
    "input": "does-not-exist.csv",
    "schema": [{"name": "a"}],
    "quasi_identifiers": [["a"]],
    "population_size": 10})");
  EXPECT_EQ(run_cli("assess --config " + cfg.string()).exit_code, 1);
}

}  // namespace
