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

#ifndef REID_RISK_HPP_
#define REID_RISK_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "reid/anonymity.hpp"
#include "reid/dataset.hpp"
#include "reid/matching.hpp"
#include "reid/quasi_identifier.hpp"

namespace reid {

// When an estimate is too fragile to report. Values of exactly 0 or 1 from a
// sample (pi < 1) are also flagged.
struct ReliabilityPolicy {
  std::uint64_t min_n1 = 2;
};

// Estimated probability that a unique match between a population unit and the
// sample is correct:
//
//   theta = n1 * pi / (n1 * pi + 2 * (1 - pi) * n2)
//
// n1 counts sample-unique patterns, n2 pairs, pi is the sampling fraction.
struct ThetaEstimate {
  std::optional<double> value;  // undefined when the denominator is zero
  std::uint64_t n1 = 0;
  double n2 = 0.0;
  double pi = 0.0;
  bool reliable = false;
};

// Throws Error(kInvalidArgument) unless 0 < pi <= 1, n2 >= 0.
ThetaEstimate theta(std::uint64_t n1, double n2, double pi, const ReliabilityPolicy& policy = {});

// n1 = sets of size 1, n2 = sets of size 2, pi = n_remaining / population.
ThetaEstimate theta_from_k(const KProfile& profile, std::uint64_t population,
                           const ReliabilityPolicy& policy = {});

// n1 = rows with n_match 1, n2 = rows with n_match 2 halved,
// pi = n_full / population.
ThetaEstimate theta_from_match(const MatchProfile& profile, std::uint64_t n_full,
                               std::uint64_t population, const ReliabilityPolicy& policy = {});

enum class Method { kListwise, kNMatch };

std::string_view to_string(Method method);
Method parse_method(std::string_view text);

struct RiskRecord {
  QuasiIdentifier qi;
  Method method;
  std::optional<KProfile> listwise;   // set for kListwise
  std::optional<MatchProfile> match;  // set for kNMatch
  ThetaEstimate theta;
};

struct RiskReport {
  std::uint64_t n_full = 0;
  std::uint64_t population = 0;
  std::vector<RiskRecord> records;  // input qi order, listwise before n_match
};

struct RiskOptions {
  std::set<Method> methods = {Method::kListwise, Method::kNMatch};
  ReliabilityPolicy reliability;
  MatchOptions match;
};

// Quasi-identifiers containing an estimated month of birth only produce an
// n_match record; listwise anonymity sets need exact values.
RiskReport risk_report(const Dataset& dataset, std::span<const QuasiIdentifier> qis,
                       std::uint64_t population, std::uint64_t n_full,
                       const RiskOptions& options = {});

bool uses_birth_month(const Dataset& dataset, const QuasiIdentifier& qi);

}  // namespace reid

#endif  // REID_RISK_HPP_
