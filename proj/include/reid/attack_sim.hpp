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

#ifndef REID_ATTACK_SIM_HPP_
#define REID_ATTACK_SIM_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reid/dataset.hpp"
#include "reid/quasi_identifier.hpp"
#include "reid/risk.hpp"

namespace reid {

struct CategoricalVariable {
  std::string name;
  std::vector<std::string> categories;
  std::vector<double> weights;  // one per category, summing to 1
};

struct PopulationSpec {
  std::uint64_t size = 0;
  std::vector<CategoricalVariable> variables;
  std::uint64_t seed = 0;

  // Throws Error(kInvalidArgument) on N = 0, no variables, a weight count
  // mismatch, negative weights, or weights not summing to 1 within 1e-9.
  void validate() const;
};

// N rows with ids "p1".."pN"; every cell drawn independently from its
// variable's categorical distribution.
Dataset gen_population(const PopulationSpec& spec);

struct DisclosedSample {
  Dataset sample;
  // Population row -> sample row, for rows that were sampled. Ground truth
  // for scoring only; the matcher never sees it.
  std::vector<std::optional<std::size_t>> inclusion;
};

// Bernoulli sampling with probability pi per row, then independent blanking
// of each cell with its variable's missing rate (absent = 0).
DisclosedSample sample_disclosed(const Dataset& population, double pi,
                                 const std::map<std::string, double>& missing_rate,
                                 std::uint64_t seed);

struct AttackResult {
  std::uint64_t draws = 0;
  std::uint64_t unique_matches = 0;
  std::uint64_t correct_unique_matches = 0;
  std::optional<double> empirical_theta;  // correct / unique
  ThetaEstimate predicted_theta;          // from the sample alone
  std::uint64_t sample_size = 0;
};

// Journalist scenario: repeatedly draw a population unit, match its pattern
// against the sample (sample missing cells are wildcards, labels are compared
// across datasets) and score unique matches against the inclusion map.
AttackResult journalist_attack(const Dataset& population, const DisclosedSample& disclosed,
                               const QuasiIdentifier& qi, std::uint64_t draws,
                               std::uint64_t seed, const ReliabilityPolicy& policy = {});

struct SimulationConfig {
  PopulationSpec population;
  double sampling_fraction = 0.1;
  std::map<std::string, double> missing_rate;
  std::size_t replicates = 1;
  std::uint64_t draws = 0;  // total, split evenly over replicates
  std::optional<QuasiIdentifier> qi;  // default: every population variable
  std::uint64_t seed = 0;
  unsigned threads = 1;
  ReliabilityPolicy reliability;
};

struct SimulationSummary {
  std::vector<AttackResult> replicates;
  std::uint64_t draws = 0;
  std::uint64_t unique_matches = 0;
  std::uint64_t correct_unique_matches = 0;
  std::optional<double> pooled_empirical_theta;
  std::optional<double> mean_predicted_theta;  // over replicates with a value
};

SimulationSummary simulate(const SimulationConfig& config);

}  // namespace reid

#endif  // REID_ATTACK_SIM_HPP_
