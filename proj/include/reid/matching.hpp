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

#ifndef REID_MATCHING_HPP_
#define REID_MATCHING_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "reid/dataset.hpp"
#include "reid/quasi_identifier.hpp"
#include "reid/row_set.hpp"

namespace reid {

// n_match semantics
// -----------------
// For a probe row, start from every row of the dataset. For each variable of
// the quasi-identifier on which the probe is observed, keep only rows whose
// cell equals the probe's value or is missing; variables on which the probe is
// missing remove nothing. n_match is the number of rows left, always >= 1.
//
// Estimated month of birth: the probe value is the earliest candidate (no
// candidates = missing); another row accepts it when its candidate list
// contains that month, and rows without candidates accept anything.
//
// With require_observed_overlap, candidates that share no commonly observed
// variable with the probe are also dropped. This only applies when the probe
// itself is observed on at least one variable.
struct MatchOptions {
  bool require_observed_overlap = false;
  unsigned threads = 1;
};

inline constexpr std::size_t kMatchThresholds[] = {1, 5, 10};

struct MatchProfile {
  explicit MatchProfile(QuasiIdentifier q) : qi(std::move(q)) {}

  QuasiIdentifier qi;
  std::vector<std::size_t> counts;                    // n_match per row
  std::map<std::size_t, std::size_t> respondents_le;  // threshold -> rows
  std::size_t n_unique = 0;                           // rows with n_match == 1
  std::size_t rows_at_two = 0;                        // rows with n_match == 2
  double n2_equivalent = 0.0;                         // rows_at_two / 2
  double pr_su = 0.0;                                 // n_unique / rows
};

MatchProfile make_match_profile(QuasiIdentifier qi, std::vector<std::size_t> counts);

// Per variable, per observed value: the rows that accept that value (equal or
// missing). Frequent values are dense bitsets, rare values keep a sorted row
// list and are combined with the variable's missing-row bitset at query time.
// Immutable after construction; queries may run concurrently.
class MatchIndex {
 public:
  MatchIndex(const Dataset& dataset, const QuasiIdentifier& qi);

  std::size_t num_rows() const noexcept { return num_rows_; }
  const QuasiIdentifier& qi() const noexcept { return qi_; }

  const RowSet& missing_rows(std::size_t qi_position) const {
    return columns_.at(qi_position).missing;
  }
  // Materialized row-set for a probe key on one qi variable: rows whose cell
  // accepts the key, plus rows missing on that variable. For categoricals the
  // key is the dictionary code, for integers the value, for birth months the
  // month number.
  RowSet rows_accepting(std::size_t qi_position, std::int64_t key) const;
  // Same, keyed by the decoded text of a value (label, number or month).
  RowSet rows_accepting(const Dataset& dataset, std::string_view variable,
                        std::string_view value) const;

  std::size_t count(std::size_t row, const MatchOptions& options = {}) const;
  std::vector<std::size_t> count_all(const MatchOptions& options = {}) const;

  // n_match of an external probe: keys[i] is the key on qi variable i or
  // nullopt when unknown. Unknown keys (never seen in the data) accept only
  // the missing rows of that variable.
  RowSet candidates(std::span<const std::optional<std::int64_t>> keys) const;

 private:
  struct Posting {
    bool dense = false;
    RowSet rows;                        // dense: rows with the value
    std::vector<std::uint32_t> sparse;  // otherwise: ascending rows
  };
  struct Column {
    RowSet missing;
    std::vector<std::int64_t> probe_key;  // per row; unused where missing
    std::unordered_map<std::int64_t, Posting> postings;
  };
  struct Scratch;

  std::size_t count_with(std::size_t row, const MatchOptions& options, Scratch& scratch) const;
  void intersect(std::vector<std::uint64_t>& acc, const Column& column, const Posting* posting,
                 std::vector<std::uint32_t>& hits) const;

  QuasiIdentifier qi_;
  std::size_t num_rows_ = 0;
  std::vector<Column> columns_;
};

// Literal per-row scan over the whole dataset; the reference the indexed path
// is checked against. Throws Error(kInvalidArgument) for an unknown id.
std::size_t n_match_row(const Dataset& dataset, const QuasiIdentifier& qi,
                        std::string_view respondent_id, const MatchOptions& options = {});
std::vector<std::size_t> n_match_reference(const Dataset& dataset, const QuasiIdentifier& qi,
                                           const MatchOptions& options = {});

// Indexed path.
MatchProfile n_match_all(const Dataset& dataset, const QuasiIdentifier& qi,
                         const MatchOptions& options = {});

}  // namespace reid

#endif  // REID_MATCHING_HPP_
