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

#ifndef REID_ANONYMITY_HPP_
#define REID_ANONYMITY_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "reid/dataset.hpp"
#include "reid/quasi_identifier.hpp"

namespace reid {

struct DeletionResult {
  Dataset remaining;
  std::size_t n_deleted = 0;
  // Input row index of every remaining row, in order.
  std::vector<std::size_t> kept_rows;
};

// Drops every row with at least one missing cell on the quasi-identifier.
DeletionResult listwise_delete(const Dataset& dataset, const QuasiIdentifier& qi);

// Rows sharing one exact response pattern on the quasi-identifier.
struct AnonymitySet {
  std::vector<std::string> pattern;  // decoded values, one per qi variable
  std::vector<std::size_t> rows;     // ascending
};

// Partition of all rows by response pattern, ordered by pattern (integers
// numerically, categorical labels lexicographically, left to right).
// Requires a fully observed quasi-identifier without birth-month variables;
// otherwise throws Error(kInvalidArgument).
std::vector<AnonymitySet> anonymity_sets(const Dataset& dataset, const QuasiIdentifier& qi);

// k(r): size of the anonymity set of each row. Same preconditions as above.
std::vector<std::size_t> anonymity_set_sizes(const Dataset& dataset, const QuasiIdentifier& qi);

// Table thresholds for "k = 1", "k <= 5", "k <= 10".
inline constexpr std::size_t kProfileThresholds[] = {1, 5, 10};

struct KProfile {
  explicit KProfile(QuasiIdentifier q) : qi(std::move(q)) {}

  QuasiIdentifier qi;
  std::size_t n_deleted = 0;
  std::size_t n_remaining = 0;
  std::size_t n_full = 0;
  std::map<std::size_t, std::size_t> k_histogram;  // set size -> number of sets
  std::size_t n_unique = 0;                        // n1
  std::size_t n_pairs = 0;                         // n2
  std::map<std::size_t, std::size_t> respondents_k_le;  // threshold -> respondents
  double pr_su_new = 0.0;   // n1 / n_remaining
  double pr_su_full = 0.0;  // n1 / n_full
};

// Listwise deletion followed by anonymity sets. n_full must be at least the
// row count of `dataset`.
KProfile k_profile(const Dataset& dataset, const QuasiIdentifier& qi, std::size_t n_full);

struct PatternCount {
  std::vector<std::string> pattern;
  std::size_t count = 0;
};

struct AuditResult {
  bool satisfied = true;
  std::vector<PatternCount> violations;  // ordered by pattern
};

// Every occurring pattern must occur at least k times.
AuditResult k_anonymity_audit(const Dataset& dataset, const QuasiIdentifier& qi, std::size_t k);

}  // namespace reid

#endif  // REID_ANONYMITY_HPP_
