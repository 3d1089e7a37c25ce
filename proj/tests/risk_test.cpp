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

#include "reid/risk.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "reid/error.hpp"
#include "test_support.hpp"

namespace reid {
namespace {

// Independent closed form.
double expected_theta(double n1, double n2, double pi) {
  return n1 * pi / (n1 * pi + 2.0 * (1.0 - pi) * n2);
}

Dataset six_respondents() {
  return load_csv(REID_FIXTURE_DIR "/six_respondents.csv",
                  {{"Age", VariableKind::kInteger, VariableRole::kBackground, {"", "."}},
                   {"Gender", VariableKind::kCategorical, VariableRole::kBackground, {"", "."}}});
}

TEST(Theta, SpotValues) {
  EXPECT_NEAR(*theta(3, 1, 10997.0 / 16500000.0).value, 0.0010, 5e-5);
  EXPECT_NEAR(*theta(2, 1, 0.04).value, 0.04, 1e-12);
  EXPECT_DOUBLE_EQ(*theta(5, 0, 0.5).value, 1.0);
  EXPECT_DOUBLE_EQ(*theta(0, 3, 0.5).value, 0.0);
  EXPECT_DOUBLE_EQ(*theta(4, 7, 1.0).value, 1.0);
  EXPECT_FALSE(theta(0, 0, 0.5).value.has_value());
}

TEST(Theta, Reliability) {
  EXPECT_FALSE(theta(1, 1, 0.1).reliable);
  EXPECT_TRUE(theta(2, 1, 0.1).reliable);
  EXPECT_FALSE(theta(20, 0, 0.1).reliable);  // exactly 1 with pi < 1
  EXPECT_TRUE(theta(20, 0, 1.0).reliable);
  EXPECT_FALSE(theta(0, 0, 0.1).reliable);
  EXPECT_FALSE(theta(5, 1, 0.1, {.min_n1 = 10}).reliable);
}

TEST(Theta, InvalidArguments) {
  EXPECT_THROW(theta(1, 1, 0.0), Error);
  EXPECT_THROW(theta(1, 1, 1.5), Error);
  EXPECT_THROW(theta(1, -1, 0.5), Error);
}

TEST(Theta, MatchesClosedFormAndIsMonotone) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> count(1, 500);
  std::uniform_real_distribution<double> frac(1e-4, 0.999);
  for (int i = 0; i < 1000; ++i) {
    const int n1 = count(rng);
    const int n2 = count(rng);
    const double pi = frac(rng);
    const double t = *theta(n1, n2, pi).value;
    ASSERT_NEAR(t, expected_theta(n1, n2, pi), 1e-12);
    ASSERT_GE(t, 0.0);
    ASSERT_LE(t, 1.0);
    ASSERT_GE(*theta(n1 + 1, n2, pi).value, t);
    ASSERT_LE(*theta(n1, n2 + 1, pi).value, t);
    ASSERT_GE(*theta(n1, n2, std::min(1.0, pi * 1.5)).value, t);
  }
}

TEST(Theta, FromProfiles) {
  const Dataset d = six_respondents();
  const QuasiIdentifier qi({"Age", "Gender"});
  const KProfile k = k_profile(d, qi, 6);
  const ThetaEstimate tk = theta_from_k(k, 100);
  EXPECT_NEAR(*tk.value, 0.04, 1e-12);
  EXPECT_DOUBLE_EQ(tk.pi, 0.04);
  const ThetaEstimate tm = theta_from_match(n_match_all(d, qi), 6, 100);
  EXPECT_DOUBLE_EQ(tm.pi, 0.06);
  EXPECT_DOUBLE_EQ(*tm.value, 1.0);
  EXPECT_FALSE(tm.reliable);
  EXPECT_THROW(theta_from_k(k, 3), Error);
  EXPECT_THROW(theta_from_match(n_match_all(d, qi), 6, 5), Error);
}

TEST(RiskReport, SixRespondentsRecords) {
  const Dataset d = six_respondents();
  const std::vector<QuasiIdentifier> qis = {QuasiIdentifier({"Age", "Gender"})};
  const RiskReport report = risk_report(d, qis, 100, d.num_rows());
  ASSERT_EQ(report.records.size(), 2u);
  EXPECT_EQ(report.records[0].method, Method::kListwise);
  EXPECT_EQ(report.records[0].listwise->n_deleted, 2u);
  EXPECT_EQ(report.records[1].method, Method::kNMatch);
  EXPECT_EQ(report.records[1].match->n_unique, 1u);

  RiskOptions only_match;
  only_match.methods = {Method::kNMatch};
  EXPECT_EQ(risk_report(d, qis, 100, 6, only_match).records.size(), 1u);
  EXPECT_THROW(risk_report(d, qis, 5, 6), Error);
  const std::vector<QuasiIdentifier> bad = {QuasiIdentifier({"Age", "Income"})};
  EXPECT_THROW(risk_report(d, bad, 100, 6), Error);
}

TEST(RiskReport, BirthMonthQiSkipsListwise) {
  std::istringstream in("id,sex,mob\n1,M,5/6\n2,F,\n3,M,5\n");
  const Dataset d = parse_csv(in, {{"sex"}, {"mob", VariableKind::kBirthMonth}});
  const std::vector<QuasiIdentifier> qis = {QuasiIdentifier({"sex", "mob"})};
  const RiskReport report = risk_report(d, qis, 1000, 3);
  ASSERT_EQ(report.records.size(), 1u);
  EXPECT_EQ(report.records[0].method, Method::kNMatch);
}

// With no missing values both methods describe the same anonymity sets and
// give the same estimate.
TEST(RiskReport, MethodsAgreeOnCompleteData) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    auto [data, names] = testing::random_dataset(
        rng, {.max_rows = 100, .allow_birth_month = false, .force_no_missing = true});
    const std::vector<QuasiIdentifier> qis = {QuasiIdentifier(names)};
    const RiskReport r = risk_report(data, qis, 10 * data.num_rows(), data.num_rows());
    ASSERT_EQ(r.records.size(), 2u);
    const ThetaEstimate& a = r.records[0].theta;
    const ThetaEstimate& b = r.records[1].theta;
    ASSERT_EQ(a.value.has_value(), b.value.has_value());
    if (a.value) {
      EXPECT_NEAR(*a.value, *b.value, 1e-12);
    }
    EXPECT_EQ(a.reliable, b.reliable);
  }
}

}  // namespace
}  // namespace reid
