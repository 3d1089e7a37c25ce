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

#include "reid/config.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "reid/commands.hpp"
#include "reid/error.hpp"
#include "reid/report.hpp"

namespace reid {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunConfig six_respondent_config() {
  return parse_run_config(slurp(REID_FIXTURE_DIR "/six_respondents.json"), REID_FIXTURE_DIR);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInternal;
}

TEST(ParseRunConfig, SixRespondentsFixture) {
  const RunConfig c = six_respondent_config();
  EXPECT_EQ(c.input, REID_FIXTURE_DIR "/six_respondents.csv");
  ASSERT_EQ(c.schema.size(), 2u);
  EXPECT_EQ(c.schema[0].kind, VariableKind::kInteger);
  EXPECT_EQ(c.schema[1].missing_tokens, (std::vector<std::string>{"", "."}));
  ASSERT_EQ(c.quasi_identifiers.size(), 1u);
  EXPECT_EQ(c.quasi_identifiers[0].label(), "Age + Gender");
  EXPECT_EQ(c.population_size, 100u);
  EXPECT_EQ(c.risk.methods.size(), 2u);
  EXPECT_EQ(c.format, OutputFormat::kText);
}

TEST(ParseRunConfig, Errors) {
  EXPECT_EQ(code_of([] { parse_run_config("{not json"); }), ErrorCode::kConfig);
  EXPECT_EQ(code_of([] { parse_run_config(R"({"bogus": 1})"); }), ErrorCode::kConfig);
  EXPECT_EQ(code_of([] {
              parse_run_config(R"({"schema": [{"name": "a"}],
                                  "quasi_identifiers": [["a", "b"]]})");
            }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { parse_run_config(R"({"schema": [{"name": "a", "kind": "float"}]})"); }),
            ErrorCode::kConfig);
  EXPECT_EQ(code_of([] { parse_run_config(R"({"methods": ["fuzzy"]})"); }), ErrorCode::kConfig);
}

TEST(ParseRunConfig, SimulationSection) {
  const RunConfig c = parse_run_config(R"({
    "seed": 5,
    "simulation": {
      "population": {"size": 1000, "variables": [
        {"name": "a", "uniform": 4},
        {"name": "b", "categories": ["x", "y"], "weights": [0.25, 0.75]}]},
      "sampling_fraction": 0.2,
      "missing_rate": {"b": 0.1},
      "replicates": 3,
      "draws": 300
    }})");
  ASSERT_TRUE(c.simulation);
  EXPECT_EQ(c.simulation->population.size, 1000u);
  EXPECT_EQ(c.simulation->population.variables[0].categories.size(), 4u);
  EXPECT_DOUBLE_EQ(c.simulation->missing_rate.at("b"), 0.1);
  EXPECT_EQ(c.simulation->replicates, 3u);
  EXPECT_EQ(c.simulation->draws, 300u);

  EXPECT_EQ(code_of([] {
              parse_run_config(R"({"simulation": {"population": {"size": 10,
                 "variables": [{"name": "a", "uniform": 2}]},
                 "sampling_fraction": 0.5, "draws": 0}})");
            }),
            ErrorCode::kInvalidArgument);
}

TEST(FormatFixed, FourDecimals) {
  EXPECT_EQ(format_fixed(0.04), "0.0400");
  EXPECT_EQ(format_fixed(1.0 / 3.0), "0.3333");
  EXPECT_EQ(format_fixed(0.00099949), "0.0010");
}

// Every number in the text table equals the rounded JSON value.
TEST(RenderReport, TextAndJsonAgree) {
  RunConfig c = six_respondent_config();
  c.format = OutputFormat::kJson;
  const auto json = nlohmann::json::parse(run_assess(c).output);
  c.format = OutputFormat::kText;
  const std::string text = run_assess(c).output;

  const auto& listwise = json["records"][0];
  EXPECT_EQ(listwise["method"], "listwise");
  EXPECT_EQ(listwise["n_deleted"], 2);
  EXPECT_NE(text.find(format_fixed(listwise["pr_su_new"].get<double>())), std::string::npos);
  EXPECT_NE(text.find(format_fixed(listwise["pr_su_full"].get<double>())), std::string::npos);
  EXPECT_NE(text.find(format_fixed(listwise["theta"]["value"].get<double>())),
            std::string::npos);
  const auto& match = json["records"][1];
  EXPECT_EQ(match["n_match_eq_1"], 1);
  EXPECT_NE(text.find(format_fixed(match["pr_su"].get<double>())), std::string::npos);
  EXPECT_FALSE(match["theta"]["reliable"].get<bool>());
  EXPECT_NE(text.find("−"), std::string::npos);
}

TEST(RenderReport, CsvHasOneLinePerRecord) {
  RunConfig c = six_respondent_config();
  c.format = OutputFormat::kCsv;
  const std::string out = run_assess(c).output;
  EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 3);
}

TEST(RunAssess, RequiresPopulationSize) {
  RunConfig c = six_respondent_config();
  c.population_size.reset();
  EXPECT_THROW(run_assess(c), Error);
}

TEST(RunOracle, ReportsAgreement) {
  const CommandOutput out = run_oracle(six_respondent_config());
  EXPECT_TRUE(out.ok);
  const auto json = nlohmann::json::parse(out.output);
  EXPECT_TRUE(json["all_equal"].get<bool>());
}

}  // namespace
}  // namespace reid
