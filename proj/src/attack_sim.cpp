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

#include <algorithm>
#include <cmath>
#include <thread>

#include "reid/anonymity.hpp"
#include "reid/error.hpp"
#include "reid/matching.hpp"
#include "reid/random.hpp"

namespace reid {
namespace {

// Stream identifiers for Rng paths.
constexpr std::uint64_t kPopulationStream = 1;
constexpr std::uint64_t kSampleStream = 2;
constexpr std::uint64_t kAttackStream = 3;
constexpr std::uint64_t kReplicateStream = 4;

bool has_missing(const Dataset& data, const std::vector<std::size_t>& columns) {
  for (std::size_t var : columns) {
    for (const Value& v : data.column(var)) {
      if (v.is_missing()) return true;
    }
  }
  return false;
}

}  // namespace

void PopulationSpec::validate() const {
  if (size == 0) throw Error(ErrorCode::kInvalidArgument, "population size must be at least 1");
  if (variables.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "population needs at least one variable");
  }
  for (const auto& var : variables) {
    if (var.categories.empty() || var.categories.size() != var.weights.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "variable '" + var.name + "' needs one weight per category");
    }
    double total = 0.0;
    for (double w : var.weights) {
      if (!(w >= 0.0)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "variable '" + var.name + "' has a negative weight");
      }
      total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) {
      throw Error(ErrorCode::kInvalidArgument,
                  "weights of variable '" + var.name + "' sum to " + std::to_string(total));
    }
  }
}

Dataset gen_population(const PopulationSpec& spec) {
  spec.validate();
  std::vector<VariableSpec> schema;
  for (const auto& var : spec.variables) {
    schema.push_back({var.name, VariableKind::kCategorical, VariableRole::kBackground, {""}});
  }
  std::vector<std::vector<double>> cumulative;
  for (const auto& var : spec.variables) {
    std::vector<double> c;
    double acc = 0.0;
    for (double w : var.weights) c.push_back(acc += w);
    c.back() = 1.0;
    cumulative.push_back(std::move(c));
  }

  Rng rng(spec.seed, {kPopulationStream});
  DatasetBuilder builder(schema);
  for (std::uint64_t i = 0; i < spec.size; ++i) {
    builder.add_row("p" + std::to_string(i + 1));
    for (std::size_t v = 0; v < spec.variables.size(); ++v) {
      const double u = rng.uniform();
      const auto& c = cumulative[v];
      std::size_t category = 0;
      while (category + 1 < c.size() && !(u < c[category])) ++category;
      builder.set_label(v, spec.variables[v].categories[category]);
    }
  }
  return std::move(builder).build();
}

DisclosedSample sample_disclosed(const Dataset& population, double pi,
                                 const std::map<std::string, double>& missing_rate,
                                 std::uint64_t seed) {
  if (!(pi > 0.0 && pi <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "sampling fraction must lie in (0, 1]");
  }
  std::vector<double> rates(population.num_variables(), 0.0);
  for (const auto& [name, rate] : missing_rate) {
    if (!(rate >= 0.0 && rate < 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "missing rate for '" + name + "' must lie in [0, 1)");
    }
    rates[population.variable_index(name)] = rate;
  }

  Rng rng(seed, {kSampleStream});
  DisclosedSample out;
  out.inclusion.assign(population.num_rows(), std::nullopt);
  DatasetBuilder builder(population.schema());
  for (std::size_t r = 0; r < population.num_rows(); ++r) {
    if (!rng.bernoulli(pi)) continue;
    out.inclusion[r] = builder.add_row(population.id(r));
    for (std::size_t v = 0; v < population.num_variables(); ++v) {
      if (rates[v] > 0.0 && rng.bernoulli(rates[v])) continue;  // blanked
      builder.copy_cell(v, population, r, v);
    }
  }
  out.sample = std::move(builder).build();
  return out;
}

AttackResult journalist_attack(const Dataset& population, const DisclosedSample& disclosed,
                               const QuasiIdentifier& qi, std::uint64_t draws,
                               std::uint64_t seed, const ReliabilityPolicy& policy) {
  if (draws == 0) throw Error(ErrorCode::kInvalidArgument, "draws must be positive");
  const Dataset& sample = disclosed.sample;
  if (disclosed.inclusion.size() != population.num_rows()) {
    throw Error(ErrorCode::kInvalidArgument, "inclusion map does not match the population");
  }
  const auto pop_columns = qi.resolve(population);
  const auto sample_columns = qi.resolve(sample);

  AttackResult result;
  result.draws = draws;
  result.sample_size = sample.num_rows();
  const std::uint64_t population_size = population.num_rows();

  if (sample.num_rows() > 0) {
    const MatchIndex index(sample, qi);
    Rng rng(seed, {kAttackStream});
    std::vector<std::optional<std::int64_t>> keys(pop_columns.size());
    for (std::uint64_t d = 0; d < draws; ++d) {
      const auto unit = static_cast<std::size_t>(rng.below(population_size));
      // Translate the unit's pattern into the sample's coding.
      for (std::size_t i = 0; i < pop_columns.size(); ++i) {
        const std::size_t pv = pop_columns[i];
        const std::size_t sv = sample_columns[i];
        const Value& cell = population.cell(unit, pv);
        if (cell.is_missing()) {
          keys[i].reset();
        } else if (population.spec(pv).kind == VariableKind::kCategorical) {
          const auto code = sample.find_code(sv, population.label(pv, cell.code()));
          keys[i] = code ? std::int64_t{*code} : std::int64_t{-1};
        } else if (population.spec(pv).kind == VariableKind::kBirthMonth) {
          keys[i] = BirthMonthEstimate::unpack(cell.payload()).first();
        } else {
          keys[i] = cell.payload();
        }
      }
      const RowSet matches = index.candidates(keys);
      if (matches.count() != 1) continue;
      ++result.unique_matches;
      const std::size_t matched_row = matches.to_vector().front();
      if (disclosed.inclusion[unit] == matched_row) ++result.correct_unique_matches;
    }
  }
  if (result.unique_matches > 0) {
    result.empirical_theta = static_cast<double>(result.correct_unique_matches) /
                             static_cast<double>(result.unique_matches);
  }

  const std::uint64_t n = sample.num_rows();
  if (n > 0) {
    if (has_missing(sample, sample_columns)) {
      result.predicted_theta =
          theta_from_match(n_match_all(sample, qi), n, population_size, policy);
    } else {
      result.predicted_theta =
          theta_from_k(k_profile(sample, qi, n), population_size, policy);
    }
  }
  return result;
}

SimulationSummary simulate(const SimulationConfig& config) {
  if (config.draws == 0) throw Error(ErrorCode::kInvalidArgument, "draws must be positive");
  if (config.replicates == 0) {
    throw Error(ErrorCode::kInvalidArgument, "replicates must be positive");
  }
  if (config.draws < config.replicates) {
    throw Error(ErrorCode::kInvalidArgument, "draws must be at least the number of replicates");
  }
  PopulationSpec pop_spec = config.population;
  const Dataset population = gen_population(pop_spec);

  std::vector<std::string> names;
  for (const auto& spec : population.schema()) names.push_back(spec.name);
  const QuasiIdentifier qi = config.qi ? *config.qi : QuasiIdentifier(names);
  qi.resolve(population);

  SimulationSummary summary;
  summary.replicates.resize(config.replicates);
  const auto run = [&](std::size_t r) {
    Rng seeds(config.seed, {kReplicateStream, r});
    const std::uint64_t sample_seed = seeds.next();
    const std::uint64_t attack_seed = seeds.next();
    std::uint64_t draws = config.draws / config.replicates;
    if (r < config.draws % config.replicates) ++draws;
    const DisclosedSample disclosed =
        sample_disclosed(population, config.sampling_fraction, config.missing_rate, sample_seed);
    summary.replicates[r] =
        journalist_attack(population, disclosed, qi, draws, attack_seed, config.reliability);
  };

  const std::size_t threads = std::clamp<std::size_t>(config.threads, 1, config.replicates);
  if (threads == 1) {
    for (std::size_t r = 0; r < config.replicates; ++r) run(r);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t r = t; r < config.replicates; r += threads) run(r);
      });
    }
    for (auto& th : pool) th.join();
  }

  double predicted_total = 0.0;
  std::size_t predicted_count = 0;
  for (const auto& rep : summary.replicates) {
    summary.draws += rep.draws;
    summary.unique_matches += rep.unique_matches;
    summary.correct_unique_matches += rep.correct_unique_matches;
    if (rep.predicted_theta.value) {
      predicted_total += *rep.predicted_theta.value;
      ++predicted_count;
    }
  }
  if (summary.unique_matches > 0) {
    summary.pooled_empirical_theta = static_cast<double>(summary.correct_unique_matches) /
                                     static_cast<double>(summary.unique_matches);
  }
  if (predicted_count > 0) {
    summary.mean_predicted_theta = predicted_total / static_cast<double>(predicted_count);
  }
  return summary;
}

}  // namespace reid
