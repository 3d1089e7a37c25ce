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

#include <algorithm>
#include <numeric>

#include "reid/error.hpp"

namespace reid {
namespace {

// Per-row sort keys whose order is the pattern order and whose equality is
// pattern equality.
std::vector<std::vector<std::int64_t>> pattern_keys(const Dataset& dataset,
                                                    const QuasiIdentifier& qi) {
  const auto columns = qi.resolve(dataset);
  std::vector<std::vector<std::int64_t>> keys(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const std::size_t var = columns[i];
    if (dataset.spec(var).kind == VariableKind::kBirthMonth) {
      throw Error(ErrorCode::kInvalidArgument,
                  "estimated month of birth '" + dataset.spec(var).name +
                      "' cannot be used with listwise anonymity sets");
    }
    std::vector<std::int64_t> label_rank;
    if (dataset.spec(var).kind == VariableKind::kCategorical) {
      const auto& dict = dataset.dictionary(var);
      std::vector<std::int32_t> order(dict.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](std::int32_t a, std::int32_t b) { return dict[a] < dict[b]; });
      label_rank.resize(dict.size());
      for (std::size_t rank = 0; rank < order.size(); ++rank) {
        label_rank[static_cast<std::size_t>(order[rank])] = static_cast<std::int64_t>(rank);
      }
    }
    auto& column_keys = keys[i];
    column_keys.reserve(dataset.num_rows());
    for (std::size_t r = 0; r < dataset.num_rows(); ++r) {
      const Value& v = dataset.cell(r, var);
      if (v.is_missing()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "respondent '" + dataset.id(r) + "' is missing '" + dataset.spec(var).name +
                        "'; apply listwise deletion first");
      }
      column_keys.push_back(label_rank.empty() ? v.payload()
                                               : label_rank[static_cast<std::size_t>(v.code())]);
    }
  }
  return keys;
}

}  // namespace

DeletionResult listwise_delete(const Dataset& dataset, const QuasiIdentifier& qi) {
  const auto columns = qi.resolve(dataset);
  DeletionResult result;
  for (std::size_t r = 0; r < dataset.num_rows(); ++r) {
    const bool complete = std::none_of(columns.begin(), columns.end(), [&](std::size_t v) {
      return dataset.cell(r, v).is_missing();
    });
    if (complete) result.kept_rows.push_back(r);
  }
  result.n_deleted = dataset.num_rows() - result.kept_rows.size();
  result.remaining = dataset.select_rows(result.kept_rows);
  return result;
}

std::vector<AnonymitySet> anonymity_sets(const Dataset& dataset, const QuasiIdentifier& qi) {
  const auto keys = pattern_keys(dataset, qi);
  const auto columns = qi.resolve(dataset);
  std::vector<std::size_t> order(dataset.num_rows());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto less = [&](std::size_t a, std::size_t b) {
    for (const auto& column : keys) {
      if (column[a] != column[b]) return column[a] < column[b];
    }
    return false;
  };
  std::stable_sort(order.begin(), order.end(), less);

  std::vector<AnonymitySet> sets;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || less(order[i - 1], order[i])) {
      AnonymitySet set;
      for (std::size_t var : columns) set.pattern.push_back(dataset.format_cell(order[i], var));
      sets.push_back(std::move(set));
    }
    sets.back().rows.push_back(order[i]);
  }
  return sets;
}

std::vector<std::size_t> anonymity_set_sizes(const Dataset& dataset, const QuasiIdentifier& qi) {
  std::vector<std::size_t> sizes(dataset.num_rows(), 0);
  for (const auto& set : anonymity_sets(dataset, qi)) {
    for (std::size_t r : set.rows) sizes[r] = set.rows.size();
  }
  return sizes;
}

KProfile k_profile(const Dataset& dataset, const QuasiIdentifier& qi, std::size_t n_full) {
  if (n_full < dataset.num_rows()) {
    throw Error(ErrorCode::kInvalidArgument,
                "n_full (" + std::to_string(n_full) + ") is smaller than the dataset (" +
                    std::to_string(dataset.num_rows()) + " rows)");
  }
  const DeletionResult deleted = listwise_delete(dataset, qi);
  KProfile profile(qi);
  profile.n_deleted = deleted.n_deleted;
  profile.n_remaining = deleted.remaining.num_rows();
  profile.n_full = n_full;
  for (std::size_t t : kProfileThresholds) profile.respondents_k_le[t] = 0;

  for (const auto& set : anonymity_sets(deleted.remaining, qi)) {
    const std::size_t k = set.rows.size();
    ++profile.k_histogram[k];
    for (std::size_t t : kProfileThresholds) {
      if (k <= t) profile.respondents_k_le[t] += k;
    }
  }
  if (auto it = profile.k_histogram.find(1); it != profile.k_histogram.end()) {
    profile.n_unique = it->second;
  }
  if (auto it = profile.k_histogram.find(2); it != profile.k_histogram.end()) {
    profile.n_pairs = it->second;
  }
  const auto n1 = static_cast<double>(profile.n_unique);
  profile.pr_su_new = profile.n_remaining == 0 ? 0.0 : n1 / static_cast<double>(profile.n_remaining);
  profile.pr_su_full = n_full == 0 ? 0.0 : n1 / static_cast<double>(n_full);
  return profile;
}

AuditResult k_anonymity_audit(const Dataset& dataset, const QuasiIdentifier& qi, std::size_t k) {
  AuditResult result;
  for (auto& set : anonymity_sets(dataset, qi)) {
    if (set.rows.size() < k) {
      result.satisfied = false;
      result.violations.push_back({std::move(set.pattern), set.rows.size()});
    }
  }
  return result;
}

}  // namespace reid
