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

#include "reid/anonymity.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "reid/error.hpp"
#include "test_support.hpp"

namespace reid {
namespace {

Dataset six_respondents() {
  return load_csv(REID_FIXTURE_DIR "/six_respondents.csv",
                  {{"Age", VariableKind::kInteger, VariableRole::kBackground, {"", "."}},
                   {"Gender", VariableKind::kCategorical, VariableRole::kBackground, {"", "."}}});
}

const QuasiIdentifier kAgeGender({"Age", "Gender"});

TEST(ListwiseDelete, SixRespondents) {
  const DeletionResult r = listwise_delete(six_respondents(), kAgeGender);
  EXPECT_EQ(r.n_deleted, 2u);
  EXPECT_EQ(r.remaining.respondent_ids(), (std::vector<std::string>{"1", "2", "5", "6"}));
  EXPECT_EQ(r.kept_rows, (std::vector<std::size_t>{0, 1, 4, 5}));
}

TEST(ListwiseDelete, OnlyQiVariablesCount) {
  const DeletionResult r = listwise_delete(six_respondents(), QuasiIdentifier({"Gender"}));
  EXPECT_EQ(r.n_deleted, 1u);
  EXPECT_EQ(r.remaining.num_variables(), 2u);
}

TEST(ListwiseDelete, UnknownVariable) {
  try {
    listwise_delete(six_respondents(), QuasiIdentifier({"Age", "Income"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
    EXPECT_NE(std::string(e.what()).find("Income"), std::string::npos);
  }
}

TEST(AnonymitySets, SixRespondentsKColumn) {
  const DeletionResult r = listwise_delete(six_respondents(), kAgeGender);
  EXPECT_EQ(anonymity_set_sizes(r.remaining, kAgeGender),
            (std::vector<std::size_t>{1, 1, 2, 2}));
  const auto sets = anonymity_sets(r.remaining, kAgeGender);
  ASSERT_EQ(sets.size(), 3u);
  EXPECT_EQ(sets[0].pattern, (std::vector<std::string>{"23", "Male"}));
  EXPECT_EQ(sets[0].rows, (std::vector<std::size_t>{2, 3}));
}

TEST(AnonymitySets, MissingCellsRejected) {
  EXPECT_THROW(anonymity_sets(six_respondents(), kAgeGender), Error);
}

TEST(KProfile, SixRespondents) {
  const KProfile p = k_profile(listwise_delete(six_respondents(), kAgeGender).remaining, kAgeGender, 6);
  EXPECT_EQ(p.n_remaining, 4u);
  EXPECT_EQ(p.n_unique, 2u);
  EXPECT_EQ(p.n_pairs, 1u);
  EXPECT_EQ(p.respondents_k_le.at(1), 2u);
  EXPECT_EQ(p.respondents_k_le.at(5), 4u);
  EXPECT_EQ(p.respondents_k_le.at(10), 4u);
  EXPECT_DOUBLE_EQ(p.pr_su_new, 0.5);
  EXPECT_DOUBLE_EQ(p.pr_su_full, 2.0 / 6.0);
  EXPECT_THROW(k_profile(six_respondents().select_rows(std::vector<std::size_t>{0, 1}), kAgeGender, 1),
               Error);
}

TEST(KProfile, EmptyDataset) {
  const Dataset empty = six_respondents().select_rows(std::vector<std::size_t>{});
  const KProfile p = k_profile(empty, kAgeGender, 0);
  EXPECT_EQ(p.n_remaining, 0u);
  EXPECT_EQ(p.n_unique, 0u);
  EXPECT_DOUBLE_EQ(p.pr_su_new, 0.0);
}

TEST(KAnonymityAudit, ReportsViolations) {
  const Dataset d = listwise_delete(six_respondents(), kAgeGender).remaining;
  const AuditResult two = k_anonymity_audit(d, kAgeGender, 2);
  EXPECT_FALSE(two.satisfied);
  ASSERT_EQ(two.violations.size(), 2u);
  EXPECT_EQ(two.violations[0].pattern, (std::vector<std::string>{"36", "Female"}));
  EXPECT_EQ(two.violations[0].count, 1u);
  EXPECT_TRUE(k_anonymity_audit(d, kAgeGender, 1).satisfied);
}

// Set sizes agree with a pairwise scan, sizes sum to n, and adding a variable
// never merges sets.
TEST(AnonymitySets, Properties) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    auto [data, names] = testing::random_dataset(rng, {.max_rows = 80, .allow_birth_month = false});
    const QuasiIdentifier qi(names);
    const DeletionResult del = listwise_delete(data, qi);
    const auto oracle = testing::brute_force_k(data, qi);
    const auto sizes = anonymity_set_sizes(del.remaining, qi);
    ASSERT_EQ(sizes.size(), del.kept_rows.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      ASSERT_EQ(sizes[i], oracle[del.kept_rows[i]]);
    }
    std::size_t total = 0;
    for (const auto& set : anonymity_sets(del.remaining, qi)) total += set.rows.size();
    EXPECT_EQ(total, del.remaining.num_rows());

    if (names.size() >= 2) {
      const QuasiIdentifier coarse(std::vector<std::string>(names.begin(), names.end() - 1));
      const auto fine = anonymity_set_sizes(del.remaining, qi);
      const auto coarse_sizes = anonymity_set_sizes(del.remaining, coarse);
      for (std::size_t i = 0; i < fine.size(); ++i) ASSERT_LE(fine[i], coarse_sizes[i]);
      // Deletion under the larger qi never keeps more rows.
      EXPECT_LE(listwise_delete(data, qi).remaining.num_rows(),
                listwise_delete(data, coarse).remaining.num_rows());
    }
  }
}

}  // namespace
}  // namespace reid
