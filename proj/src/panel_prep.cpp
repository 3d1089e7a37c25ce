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

#include "reid/panel_prep.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <unordered_map>

#include "reid/csv.hpp"
#include "reid/error.hpp"

namespace reid {

YearMonth YearMonth::parse(std::string_view text) {
  const auto bad = [&] {
    return Error(ErrorCode::kParse, "invalid year-month '" + std::string(text) +
                                        "' (expected YYYY-MM)");
  };
  if (text.size() != 7 || text[4] != '-') throw bad();
  YearMonth ym;
  auto r1 = std::from_chars(text.data(), text.data() + 4, ym.year);
  auto r2 = std::from_chars(text.data() + 5, text.data() + 7, ym.month);
  if (r1.ec != std::errc() || r1.ptr != text.data() + 4 || r2.ec != std::errc() ||
      r2.ptr != text.data() + 7 || ym.month < 1 || ym.month > 12) {
    throw bad();
  }
  return ym;
}

std::string YearMonth::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d", year, month);
  return buf;
}

WaveSeries::WaveSeries(std::vector<Wave> waves) : waves_(std::move(waves)) {
  if (waves_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "wave series needs at least one wave");
  }
  for (std::size_t i = 1; i < waves_.size(); ++i) {
    if (!(waves_[i - 1].month < waves_[i].month)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "wave months not strictly increasing at " + waves_[i].month.to_string());
    }
    if (waves_[i].data.schema() != waves_[0].data.schema()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "wave " + waves_[i].month.to_string() + " has a different schema");
    }
  }
}

Dataset merge_waves(const WaveSeries& series) {
  const auto& waves = series.waves();
  const std::size_t n_vars = series.schema().size();

  struct Source {
    std::size_t wave = 0;
    std::size_t row = 0;
    bool observed = false;
  };
  std::vector<std::string> ids;
  std::unordered_map<std::string, std::size_t> merged_row;
  std::vector<std::vector<Source>> sources;

  for (std::size_t w = 0; w < waves.size(); ++w) {
    const Dataset& data = waves[w].data;
    for (std::size_t r = 0; r < data.num_rows(); ++r) {
      auto [it, inserted] = merged_row.emplace(data.id(r), ids.size());
      if (inserted) {
        ids.push_back(data.id(r));
        sources.emplace_back(n_vars);
      }
      auto& row_sources = sources[it->second];
      for (std::size_t v = 0; v < n_vars; ++v) {
        if (!data.cell(r, v).is_missing()) row_sources[v] = {w, r, true};
      }
    }
  }

  DatasetBuilder builder(series.schema());
  for (std::size_t m = 0; m < ids.size(); ++m) {
    builder.add_row(ids[m]);
    for (std::size_t v = 0; v < n_vars; ++v) {
      const Source& s = sources[m][v];
      if (s.observed) builder.copy_cell(v, waves[s.wave].data, s.row, v);
    }
  }
  return std::move(builder).build();
}

FilterResult filter_background_only(const Dataset& merged, const Participation& participation) {
  std::vector<std::size_t> background;
  for (std::size_t v = 0; v < merged.num_variables(); ++v) {
    if (merged.spec(v).role == VariableRole::kBackground) background.push_back(v);
  }
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r < merged.num_rows(); ++r) {
    const bool has_background = std::any_of(background.begin(), background.end(), [&](auto v) {
      return !merged.cell(r, v).is_missing();
    });
    const auto it = participation.find(merged.id(r));
    const bool in_study = it != participation.end() && !it->second.empty();
    if (has_background && in_study) keep.push_back(r);
  }
  FilterResult result;
  result.n_removed = merged.num_rows() - keep.size();
  result.kept = merged.select_rows(keep);
  return result;
}

BirthMonthEstimate estimate_birth_month(std::span<const AgeObservation> history) {
  std::set<int> change_months;
  const AgeObservation* previous = nullptr;
  for (std::size_t i = 0; i < history.size(); ++i) {
    const AgeObservation& obs = history[i];
    if (i > 0 && !(history[i - 1].month < obs.month)) {
      throw Error(ErrorCode::kInvalidArgument, "age history not in chronological order at " +
                                                   obs.month.to_string());
    }
    if (!obs.age) continue;
    if (previous != nullptr) {
      if (*obs.age < *previous->age) {
        throw Error(ErrorCode::kInconsistentAges,
                    "age decreases from " + std::to_string(*previous->age) + " to " +
                        std::to_string(*obs.age) + " at " + obs.month.to_string());
      }
      // Only a +1 step between adjacent calendar months pins the change month.
      if (*obs.age == *previous->age + 1 &&
          obs.month.ordinal() - previous->month.ordinal() == 1) {
        change_months.insert(obs.month.month);
      }
    }
    previous = &obs;
  }

  switch (change_months.size()) {
    case 0:
      return {};
    case 1:
      return BirthMonthEstimate::around_change(*change_months.begin());
    case 2: {
      const int lo = *change_months.begin();
      const int hi = *change_months.rbegin();
      if (next_month(lo) == hi) return BirthMonthEstimate(lo);
      if (next_month(hi) == lo) return BirthMonthEstimate(hi);  // December, January
      throw Error(ErrorCode::kInconsistentAges,
                  "age changed in non-adjacent months " + std::to_string(lo) + " and " +
                      std::to_string(hi));
    }
    default:
      throw Error(ErrorCode::kInconsistentAges,
                  "age changed in " + std::to_string(change_months.size()) +
                      " different calendar months");
  }
}

std::vector<AgeObservation> age_history(const WaveSeries& series, std::string_view respondent,
                                        std::string_view age_variable) {
  std::vector<AgeObservation> history;
  for (const Wave& wave : series.waves()) {
    const std::size_t var = wave.data.variable_index(age_variable);
    if (wave.data.spec(var).kind != VariableKind::kInteger) {
      throw Error(ErrorCode::kInvalidArgument,
                  "age variable '" + std::string(age_variable) + "' must be an integer");
    }
    AgeObservation obs{wave.month, std::nullopt};
    if (auto row = wave.data.find_row(respondent)) {
      const Value& v = wave.data.cell(*row, var);
      if (!v.is_missing()) obs.age = v.payload();
    }
    history.push_back(obs);
  }
  return history;
}

WaveSeries load_wave_directory(const std::string& directory,
                               const std::vector<VariableSpec>& schema,
                               const CsvOptions& options) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(directory, ec)) {
    throw Error(ErrorCode::kIo, "wave directory '" + directory + "' not found");
  }
  static const std::regex kWaveName(R"((\d{4}-\d{2})\.csv)");
  std::vector<std::pair<YearMonth, fs::path>> files;
  for (const auto& entry : fs::directory_iterator(directory)) {
    if (!entry.is_regular_file()) continue;
    const std::string name = entry.path().filename().string();
    std::smatch m;
    if (std::regex_match(name, m, kWaveName)) {
      files.emplace_back(YearMonth::parse(m[1].str()), entry.path());
    }
  }
  if (files.empty()) {
    throw Error(ErrorCode::kIo, "no YYYY-MM.csv wave files in '" + directory + "'");
  }
  std::sort(files.begin(), files.end());
  std::vector<Wave> waves;
  for (const auto& [month, path] : files) {
    waves.push_back({month, load_csv(path.string(), schema, options)});
  }
  return WaveSeries(std::move(waves));
}

Participation load_participation(const std::string& path) {
  const auto records = csv::read_file(path);
  Participation participation;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& rec = records[i];
    if (rec.size() == 1 && rec[0].empty()) continue;
    if (rec.size() < 2) {
      throw Error(ErrorCode::kParse, path + ": record " + std::to_string(i + 1) +
                                         " needs a respondent id and a study id");
    }
    auto& studies = participation[rec[0]];
    if (!rec[1].empty()) studies.insert(rec[1]);
  }
  return participation;
}

Dataset with_birth_month_column(const Dataset& dataset,
                                std::span<const BirthMonthEstimate> estimates,
                                const std::string& name) {
  if (estimates.size() != dataset.num_rows()) {
    throw Error(ErrorCode::kInvalidArgument, "one birth-month estimate per row required");
  }
  auto schema = dataset.schema();
  schema.push_back({name, VariableKind::kBirthMonth, VariableRole::kDerived, {""}});
  DatasetBuilder builder(schema);
  const std::size_t mob = schema.size() - 1;
  for (std::size_t r = 0; r < dataset.num_rows(); ++r) {
    builder.add_row(dataset.id(r));
    for (std::size_t v = 0; v < dataset.num_variables(); ++v) builder.copy_cell(v, dataset, r, v);
    builder.set_months(mob, estimates[r]);
  }
  return std::move(builder).build();
}

}  // namespace reid
