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

#include "reid/attack_sim.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "reid/error.hpp"

namespace reid {
namespace {

PopulationSpec uniform_population(std::uint64_t size, int vars, int levels, std::uint64_t seed) {
  PopulationSpec spec;
  spec.size = size;
  spec.seed = seed;
  for (int v = 0; v < vars; ++v) {
    CategoricalVariable var;
    var.name = "x" + std::to_string(v);
    for (int c = 0; c < levels; ++c) {
      var.categories.push_back("c" + std::to_string(c));
      var.weights.push_back(1.0 / levels);
    }
    spec.variables.push_back(var);
  }
  return spec;
}

TEST(PopulationSpec, Validation) {
  EXPECT_NO_THROW(uniform_population(10, 2, 3, 1).validate());
  PopulationSpec bad = uniform_population(10, 1, 2, 1);
  bad.variables[0].weights = {0.5, 0.6};
  EXPECT_THROW(bad.validate(), Error);
  bad.variables[0].weights = {0.5};
  EXPECT_THROW(bad.validate(), Error);
  EXPECT_THROW(uniform_population(0, 1, 2, 1).validate(), Error);
  EXPECT_THROW(uniform_population(10, 0, 2, 1).validate(), Error);
}

TEST(GenPopulation, DeterministicAndFollowsWeights) {
  PopulationSpec spec = uniform_population(20000, 1, 2, 42);
  spec.variables[0].weights = {0.8, 0.2};
  const Dataset a = gen_population(spec);
  const Dataset b = gen_population(spec);
  EXPECT_TRUE(cells_equal(a, b));
  ASSERT_EQ(a.num_rows(), 20000u);
  std::size_t c0 = 0;
  for (std::size_t r = 0; r < a.num_rows(); ++r) c0 += a.format_cell(r, 0) == "c0";
  EXPECT_NEAR(static_cast<double>(c0) / 20000.0, 0.8, 0.02);

  spec.seed = 43;
  EXPECT_FALSE(cells_equal(a, gen_population(spec)));
}

TEST(SampleDisclosed, FractionAndMissingness) {
  const Dataset pop = gen_population(uniform_population(20000, 2, 4, 3));
  const DisclosedSample s = sample_disclosed(pop, 0.25, {{"x1", 0.5}}, 9);
  EXPECT_NEAR(static_cast<double>(s.sample.num_rows()) / 20000.0, 0.25, 0.02);
  std::size_t blank0 = 0;
  std::size_t blank1 = 0;
  for (std::size_t r = 0; r < s.sample.num_rows(); ++r) {
    blank0 += s.sample.cell(r, 0).is_missing();
    blank1 += s.sample.cell(r, 1).is_missing();
  }
  EXPECT_EQ(blank0, 0u);
  EXPECT_NEAR(static_cast<double>(blank1) / static_cast<double>(s.sample.num_rows()), 0.5, 0.03);
  for (std::size_t r = 0; r < pop.num_rows(); ++r) {
    if (s.inclusion[r]) {
      ASSERT_EQ(s.sample.id(*s.inclusion[r]), pop.id(r));
      ASSERT_EQ(s.sample.format_cell(*s.inclusion[r], 0), pop.format_cell(r, 0));
    }
  }
  EXPECT_THROW(sample_disclosed(pop, 0.0, {}, 1), Error);
  EXPECT_THROW(sample_disclosed(pop, 0.5, {{"x1", 1.0}}, 1), Error);
  EXPECT_THROW(sample_disclosed(pop, 0.5, {{"nope", 0.1}}, 1), Error);
}

TEST(JournalistAttack, FullSampleWithUniqueKeysAlwaysCorrect) {
  // Every unit has a distinct pattern, so each draw is a correct unique match.
  const Dataset pop = gen_population(uniform_population(30, 1, 100000, 5));
  const DisclosedSample s = sample_disclosed(pop, 1.0, {}, 1);
  std::vector<std::string> names = {"x0"};
  const AttackResult r = journalist_attack(pop, s, QuasiIdentifier(names), 500, 2);
  EXPECT_EQ(r.draws, 500u);
  EXPECT_EQ(r.sample_size, 30u);
  if (r.unique_matches > 0) {
    EXPECT_EQ(r.correct_unique_matches, r.unique_matches);
  }
  EXPECT_THROW(journalist_attack(pop, s, QuasiIdentifier(names), 0, 2), Error);
}

TEST(Simulate, DeterministicAcrossThreadCounts) {
  SimulationConfig config;
  config.population = uniform_population(5000, 3, 6, 1);
  config.sampling_fraction = 0.1;
  config.missing_rate = {{"x2", 0.2}};
  config.replicates = 4;
  config.draws = 4003;
  config.seed = 17;
  const SimulationSummary a = simulate(config);
  config.threads = 3;
  const SimulationSummary b = simulate(config);
  EXPECT_EQ(a.draws, 4003u);
  EXPECT_EQ(a.unique_matches, b.unique_matches);
  EXPECT_EQ(a.correct_unique_matches, b.correct_unique_matches);
  EXPECT_EQ(a.mean_predicted_theta, b.mean_predicted_theta);
  config.seed = 18;
  EXPECT_NE(simulate(config).unique_matches, a.unique_matches);
}

TEST(Simulate, RejectsBadCounts) {
  SimulationConfig config;
  config.population = uniform_population(100, 1, 2, 1);
  config.draws = 0;
  EXPECT_THROW(simulate(config), Error);
  config.draws = 10;
  config.replicates = 0;
  EXPECT_THROW(simulate(config), Error);
}

TEST(Simulate, EmpiricalRateTracksPrediction) {
  SimulationConfig config;
  config.population = uniform_population(20000, 3, 20, 7);
  config.sampling_fraction = 0.1;
  config.replicates = 10;
  config.draws = 50000;
  config.seed = 3;
  const SimulationSummary s = simulate(config);
  ASSERT_TRUE(s.pooled_empirical_theta && s.mean_predicted_theta);
  const double tol = std::max(0.2 * *s.mean_predicted_theta, 0.02);
  EXPECT_NEAR(*s.pooled_empirical_theta, *s.mean_predicted_theta, tol);
}

}  // namespace
}  // namespace reid
