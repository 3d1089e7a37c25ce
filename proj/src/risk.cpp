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

#include <string>

#include "reid/error.hpp"

namespace reid {

ThetaEstimate theta(std::uint64_t n1, double n2, double pi, const ReliabilityPolicy& policy) {
  if (!(pi > 0.0 && pi <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "sampling fraction must lie in (0, 1], got " + std::to_string(pi));
  }
  if (!(n2 >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "n2 must be non-negative");
  }
  ThetaEstimate estimate;
  estimate.n1 = n1;
  estimate.n2 = n2;
  estimate.pi = pi;
  const double uniques = static_cast<double>(n1) * pi;
  const double denominator = uniques + 2.0 * (1.0 - pi) * n2;
  if (denominator > 0.0) estimate.value = uniques / denominator;

  estimate.reliable = estimate.value.has_value() && n1 >= policy.min_n1;
  if (estimate.reliable && pi < 1.0 && (*estimate.value == 0.0 || *estimate.value == 1.0)) {
    estimate.reliable = false;
  }
  return estimate;
}

ThetaEstimate theta_from_k(const KProfile& profile, std::uint64_t population,
                           const ReliabilityPolicy& policy) {
  if (population < profile.n_remaining || population == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "population size " + std::to_string(population) + " is smaller than n = " +
                    std::to_string(profile.n_remaining));
  }
  if (profile.n_remaining == 0) {
    ThetaEstimate empty;
    return empty;
  }
  const double pi =
      static_cast<double>(profile.n_remaining) / static_cast<double>(population);
  return theta(profile.n_unique, static_cast<double>(profile.n_pairs), pi, policy);
}

ThetaEstimate theta_from_match(const MatchProfile& profile, std::uint64_t n_full,
                               std::uint64_t population, const ReliabilityPolicy& policy) {
  if (population < n_full || population == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "population size " + std::to_string(population) + " is smaller than n_full = " +
                    std::to_string(n_full));
  }
  if (n_full == 0) return {};
  const double pi = static_cast<double>(n_full) / static_cast<double>(population);
  return theta(profile.n_unique, profile.n2_equivalent, pi, policy);
}

std::string_view to_string(Method method) {
  return method == Method::kListwise ? "listwise" : "n_match";
}

Method parse_method(std::string_view text) {
  if (text == "listwise") return Method::kListwise;
  if (text == "n_match") return Method::kNMatch;
  throw Error(ErrorCode::kConfig,
              "unknown method '" + std::string(text) + "' (expected listwise or n_match)");
}

bool uses_birth_month(const Dataset& dataset, const QuasiIdentifier& qi) {
  for (std::size_t var : qi.resolve(dataset)) {
    if (dataset.spec(var).kind == VariableKind::kBirthMonth) return true;
  }
  return false;
}

RiskReport risk_report(const Dataset& dataset, std::span<const QuasiIdentifier> qis,
                       std::uint64_t population, std::uint64_t n_full,
                       const RiskOptions& options) {
  if (qis.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "at least one quasi-identifier is required");
  }
  if (options.methods.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "at least one method is required");
  }
  if (population < n_full) {
    throw Error(ErrorCode::kInvalidArgument,
                "population size " + std::to_string(population) + " is smaller than n_full = " +
                    std::to_string(n_full));
  }
  // Resolve everything up front so a bad variable fails before any work.
  for (const auto& qi : qis) qi.resolve(dataset);

  RiskReport report;
  report.n_full = n_full;
  report.population = population;
  for (const auto& qi : qis) {
    if (options.methods.count(Method::kListwise) && !uses_birth_month(dataset, qi)) {
      KProfile profile = k_profile(dataset, qi, n_full);
      ThetaEstimate t = theta_from_k(profile, population, options.reliability);
      report.records.push_back({qi, Method::kListwise, std::move(profile), std::nullopt, t});
    }
    if (options.methods.count(Method::kNMatch)) {
      MatchProfile profile = n_match_all(dataset, qi, options.match);
      ThetaEstimate t = theta_from_match(profile, n_full, population, options.reliability);
      report.records.push_back({qi, Method::kNMatch, std::nullopt, std::move(profile), t});
    }
  }
  return report;
}

}  // namespace reid
