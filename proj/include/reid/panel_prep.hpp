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

#ifndef REID_PANEL_PREP_HPP_
#define REID_PANEL_PREP_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reid/birth_month.hpp"
#include "reid/dataset.hpp"

namespace reid {

struct YearMonth {
  int year = 0;
  int month = 1;  // 1-12

  // Months since year 0; consecutive calendar months differ by one.
  int ordinal() const noexcept { return year * 12 + (month - 1); }

  // "YYYY-MM".
  static YearMonth parse(std::string_view text);
  std::string to_string() const;

  friend auto operator<=>(const YearMonth&, const YearMonth&) = default;
};

struct Wave {
  YearMonth month;
  Dataset data;
};

// Chronologically ordered monthly waves sharing one schema.
class WaveSeries {
 public:
  // Throws Error(kInvalidArgument) when months are not strictly increasing or
  // the schemas differ.
  explicit WaveSeries(std::vector<Wave> waves);

  const std::vector<Wave>& waves() const noexcept { return waves_; }
  const std::vector<VariableSpec>& schema() const { return waves_.front().data.schema(); }

 private:
  std::vector<Wave> waves_;
};

// One row per respondent seen in any wave (first-appearance order); each cell
// takes the value from the latest wave in which it is observed.
Dataset merge_waves(const WaveSeries& series);

// Respondent id -> identifiers of the non-background studies they took part
// in. Respondents absent from the map have participated in none.
using Participation = std::map<std::string, std::set<std::string>, std::less<>>;

struct FilterResult {
  Dataset kept;
  std::size_t n_removed = 0;
};

// Keeps respondents with at least one observed background variable and at
// least one study.
FilterResult filter_background_only(const Dataset& merged, const Participation& participation);

struct AgeObservation {
  YearMonth month;
  std::optional<std::int64_t> age;
};

// Month of birth from the calendar months in which the observed age went up by
// one between consecutive monthly observations:
//   no such month          -> no estimate
//   one month M            -> (M-1, M)
//   two adjacent months    -> the earlier one
// Throws Error(kInconsistentAges) on a decreasing age, two non-adjacent months
// or more than two months.
BirthMonthEstimate estimate_birth_month(std::span<const AgeObservation> history);

// The age history of one respondent across the series; waves in which the
// respondent is absent contribute a missing age.
std::vector<AgeObservation> age_history(const WaveSeries& series, std::string_view respondent,
                                        std::string_view age_variable);

// Reads every `YYYY-MM.csv` in `directory`, ordered by month.
WaveSeries load_wave_directory(const std::string& directory,
                               const std::vector<VariableSpec>& schema,
                               const CsvOptions& options = {});

// Two-column CSV (respondent id, study id) with a header row. An empty file
// yields an empty map.
Participation load_participation(const std::string& path);

// Appends a kBirthMonth variable (role derived) holding one estimate per row.
Dataset with_birth_month_column(const Dataset& dataset,
                                std::span<const BirthMonthEstimate> estimates,
                                const std::string& name);

}  // namespace reid

#endif  // REID_PANEL_PREP_HPP_
