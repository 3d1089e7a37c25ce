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

#include "reid/matching.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <thread>

#include "reid/error.hpp"

namespace reid {
namespace {

std::optional<std::int64_t> probe_key_of(const Dataset& dataset, std::size_t var,
                                         std::size_t row) {
  const Value& v = dataset.cell(row, var);
  if (v.is_missing()) return std::nullopt;
  if (dataset.spec(var).kind == VariableKind::kBirthMonth) {
    return BirthMonthEstimate::unpack(v.payload()).first();
  }
  return v.payload();
}

bool cell_accepts(const Dataset& dataset, std::size_t var, std::size_t row, std::int64_t key) {
  const Value& v = dataset.cell(row, var);
  if (v.is_missing()) return true;
  if (dataset.spec(var).kind == VariableKind::kBirthMonth) {
    return BirthMonthEstimate::unpack(v.payload()).contains(static_cast<int>(key));
  }
  return v.payload() == key;
}

std::size_t scan_count(const Dataset& dataset, const std::vector<std::size_t>& columns,
                       std::size_t row, const MatchOptions& options) {
  const std::size_t n = dataset.num_rows();
  std::vector<char> retained(n, 1);
  std::vector<std::size_t> observed;
  for (std::size_t var : columns) {
    const auto key = probe_key_of(dataset, var, row);
    if (!key) continue;  // missing probe value: nothing is removed
    observed.push_back(var);
    for (std::size_t s = 0; s < n; ++s) {
      if (retained[s] && !cell_accepts(dataset, var, s, *key)) retained[s] = 0;
    }
  }
  if (options.require_observed_overlap && !observed.empty()) {
    for (std::size_t s = 0; s < n; ++s) {
      if (!retained[s]) continue;
      const bool overlap = std::any_of(observed.begin(), observed.end(), [&](std::size_t var) {
        return !dataset.cell(s, var).is_missing();
      });
      if (!overlap) retained[s] = 0;
    }
  }
  return static_cast<std::size_t>(std::count(retained.begin(), retained.end(), 1));
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& key) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::int64_t k : key) {
      h ^= static_cast<std::uint64_t>(k) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

MatchProfile make_match_profile(QuasiIdentifier qi, std::vector<std::size_t> counts) {
  MatchProfile profile(std::move(qi));
  profile.counts = std::move(counts);
  for (std::size_t t : kMatchThresholds) profile.respondents_le[t] = 0;
  for (std::size_t c : profile.counts) {
    if (c == 1) ++profile.n_unique;
    if (c == 2) ++profile.rows_at_two;
    for (std::size_t t : kMatchThresholds) {
      if (c <= t) ++profile.respondents_le[t];
    }
  }
  profile.n2_equivalent = static_cast<double>(profile.rows_at_two) / 2.0;
  profile.pr_su = profile.counts.empty() ? 0.0
                                         : static_cast<double>(profile.n_unique) /
                                               static_cast<double>(profile.counts.size());
  return profile;
}

struct MatchIndex::Scratch {
  std::vector<std::uint64_t> acc;
  std::vector<std::uint64_t> all_missing;
  std::vector<std::uint32_t> hits;
  std::vector<std::int64_t> key;
  std::unordered_map<std::vector<std::int64_t>, std::size_t, KeyHash> cache;
};

MatchIndex::MatchIndex(const Dataset& dataset, const QuasiIdentifier& qi)
    : qi_(qi), num_rows_(dataset.num_rows()) {
  if (num_rows_ > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kInvalidArgument, "dataset too large for the match index");
  }
  for (std::size_t var : qi.resolve(dataset)) {
    const bool months = dataset.spec(var).kind == VariableKind::kBirthMonth;
    Column column;
    column.missing = RowSet(num_rows_);
    column.probe_key.assign(num_rows_, 0);
    std::unordered_map<std::int64_t, std::vector<std::uint32_t>> exact;
    for (std::size_t r = 0; r < num_rows_; ++r) {
      const Value& v = dataset.cell(r, var);
      if (v.is_missing()) {
        column.missing.set(r);
        continue;
      }
      const auto row = static_cast<std::uint32_t>(r);
      if (months) {
        const auto estimate = BirthMonthEstimate::unpack(v.payload());
        column.probe_key[r] = estimate.first();
        for (int m : estimate.candidates()) exact[m].push_back(row);
      } else {
        column.probe_key[r] = v.payload();
        exact[v.payload()].push_back(row);
      }
    }
    for (auto& [key, rows] : exact) {
      Posting posting;
      // A bitset costs num_rows/64 words; keep a list when that is cheaper.
      posting.dense = rows.size() * 64 >= num_rows_;
      if (posting.dense) {
        posting.rows = RowSet(num_rows_);
        for (auto r : rows) posting.rows.set(r);
      } else {
        posting.sparse = std::move(rows);
      }
      column.postings.emplace(key, std::move(posting));
    }
    columns_.push_back(std::move(column));
  }
}

RowSet MatchIndex::rows_accepting(std::size_t qi_position, std::int64_t key) const {
  const Column& column = columns_.at(qi_position);
  RowSet out = column.missing;
  const auto it = column.postings.find(key);
  if (it == column.postings.end()) return out;
  if (it->second.dense) {
    out |= it->second.rows;
  } else {
    for (auto r : it->second.sparse) out.set(r);
  }
  return out;
}

RowSet MatchIndex::rows_accepting(const Dataset& dataset, std::string_view variable,
                                  std::string_view value) const {
  const auto& vars = qi_.variables();
  const auto pos = std::find(vars.begin(), vars.end(), variable);
  if (pos == vars.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "variable '" + std::string(variable) + "' is not part of the index");
  }
  const std::size_t qi_position = static_cast<std::size_t>(pos - vars.begin());
  const std::size_t var = dataset.variable_index(variable);
  std::int64_t key = 0;
  switch (dataset.spec(var).kind) {
    case VariableKind::kCategorical: {
      const auto code = dataset.find_code(var, value);
      if (!code) return columns_.at(qi_position).missing;
      key = *code;
      break;
    }
    case VariableKind::kInteger:
    case VariableKind::kBirthMonth:
      key = std::stoll(std::string(value));
      break;
  }
  return rows_accepting(qi_position, key);
}

void MatchIndex::intersect(std::vector<std::uint64_t>& acc, const Column& column,
                           const Posting* posting, std::vector<std::uint32_t>& hits) const {
  const auto& missing = column.missing.words();
  if (posting != nullptr && posting->dense) {
    const auto& rows = posting->rows.words();
    for (std::size_t w = 0; w < acc.size(); ++w) acc[w] &= missing[w] | rows[w];
    return;
  }
  hits.clear();
  if (posting != nullptr) {
    for (auto r : posting->sparse) {
      if ((acc[r >> 6] >> (r & 63)) & 1U) hits.push_back(r);
    }
  }
  for (std::size_t w = 0; w < acc.size(); ++w) acc[w] &= missing[w];
  for (auto r : hits) acc[r >> 6] |= std::uint64_t{1} << (r & 63);
}

std::size_t MatchIndex::count_with(std::size_t row, const MatchOptions& options,
                                   Scratch& scratch) const {
  // Rows with the same observed pattern have the same count.
  scratch.key.clear();
  for (const Column& column : columns_) {
    const bool missing = column.missing.test(row);
    scratch.key.push_back(missing ? 1 : 0);
    scratch.key.push_back(missing ? 0 : column.probe_key[row]);
  }
  if (const auto it = scratch.cache.find(scratch.key); it != scratch.cache.end()) {
    return it->second;
  }

  RowSet all(num_rows_, true);
  scratch.acc = all.words();
  scratch.all_missing = all.words();
  bool any_observed = false;
  for (const Column& column : columns_) {
    if (column.missing.test(row)) continue;
    any_observed = true;
    intersect(scratch.acc, column, &column.postings.at(column.probe_key[row]), scratch.hits);
    if (options.require_observed_overlap) {
      const auto& missing = column.missing.words();
      for (std::size_t w = 0; w < scratch.all_missing.size(); ++w) {
        scratch.all_missing[w] &= missing[w];
      }
    }
  }
  if (options.require_observed_overlap && any_observed) {
    for (std::size_t w = 0; w < scratch.acc.size(); ++w) scratch.acc[w] &= ~scratch.all_missing[w];
  }
  std::size_t total = 0;
  for (std::uint64_t w : scratch.acc) total += static_cast<std::size_t>(std::popcount(w));
  scratch.cache.emplace(scratch.key, total);
  return total;
}

std::size_t MatchIndex::count(std::size_t row, const MatchOptions& options) const {
  if (row >= num_rows_) throw Error(ErrorCode::kInvalidArgument, "row out of range");
  Scratch scratch;
  return count_with(row, options, scratch);
}

std::vector<std::size_t> MatchIndex::count_all(const MatchOptions& options) const {
  std::vector<std::size_t> counts(num_rows_);
  const auto work = [&](std::size_t begin, std::size_t end) {
    Scratch scratch;
    for (std::size_t r = begin; r < end; ++r) counts[r] = count_with(r, options, scratch);
  };
  const std::size_t threads =
      std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(1, num_rows_ / 1024));
  if (threads <= 1) {
    work(0, num_rows_);
    return counts;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (num_rows_ + threads - 1) / threads;
  for (std::size_t begin = 0; begin < num_rows_; begin += chunk) {
    pool.emplace_back(work, begin, std::min(num_rows_, begin + chunk));
  }
  for (auto& t : pool) t.join();
  return counts;
}

RowSet MatchIndex::candidates(std::span<const std::optional<std::int64_t>> keys) const {
  if (keys.size() != columns_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "probe has the wrong number of keys");
  }
  RowSet result(num_rows_, true);
  std::vector<std::uint32_t> hits;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (!keys[i]) continue;
    const auto it = columns_[i].postings.find(*keys[i]);
    intersect(result.words(), columns_[i], it == columns_[i].postings.end() ? nullptr : &it->second,
              hits);
  }
  return result;
}

std::size_t n_match_row(const Dataset& dataset, const QuasiIdentifier& qi,
                        std::string_view respondent_id, const MatchOptions& options) {
  const auto row = dataset.find_row(respondent_id);
  if (!row) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown respondent '" + std::string(respondent_id) + "'");
  }
  return scan_count(dataset, qi.resolve(dataset), *row, options);
}

std::vector<std::size_t> n_match_reference(const Dataset& dataset, const QuasiIdentifier& qi,
                                           const MatchOptions& options) {
  const auto columns = qi.resolve(dataset);
  std::vector<std::size_t> counts(dataset.num_rows());
  for (std::size_t r = 0; r < dataset.num_rows(); ++r) {
    counts[r] = scan_count(dataset, columns, r, options);
  }
  return counts;
}

MatchProfile n_match_all(const Dataset& dataset, const QuasiIdentifier& qi,
                         const MatchOptions& options) {
  const MatchIndex index(dataset, qi);
  return make_match_profile(qi, index.count_all(options));
}

}  // namespace reid
