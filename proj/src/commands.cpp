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

#include "reid/commands.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "reid/error.hpp"
#include "reid/matching.hpp"
#include "reid/panel_prep.hpp"
#include "reid/report.hpp"

namespace reid {
namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorCode::kConfig, "config: " + message);
}

Dataset load_input(const RunConfig& config) {
  require(!config.input.empty(), "'input' is required");
  require(!config.schema.empty(), "'schema' is required");
  return load_csv(config.input, config.schema, config.csv);
}

}  // namespace

CommandOutput run_prep(const RunConfig& config) {
  require(!config.waves_dir.empty(), "'waves_dir' is required for prep");
  require(!config.participation.empty(), "'participation' is required for prep");
  require(!config.schema.empty(), "'schema' is required");
  const auto age = std::find_if(config.schema.begin(), config.schema.end(),
                                [&](const VariableSpec& s) { return s.name == config.age_variable; });
  if (age == config.schema.end() || age->kind != VariableKind::kInteger) {
    throw Error(ErrorCode::kInvalidArgument,
                "age variable '" + config.age_variable + "' must be an integer schema variable");
  }

  CommandOutput result;
  const WaveSeries series = load_wave_directory(config.waves_dir, config.schema, config.csv);
  const Dataset merged = merge_waves(series);
  const Participation participation = load_participation(config.participation);
  if (participation.empty()) {
    result.warnings.push_back("participation file lists no respondents; all are removed");
  }
  const FilterResult filtered = filter_background_only(merged, participation);

  std::vector<BirthMonthEstimate> estimates;
  std::size_t two = 0, one = 0, none = 0;
  for (const auto& id : filtered.kept.respondent_ids()) {
    const auto history = age_history(series, id, config.age_variable);
    BirthMonthEstimate estimate;
    try {
      estimate = estimate_birth_month(history);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInconsistentAges) throw;
      result.warnings.push_back("respondent '" + id + "': " + e.what() +
                                "; month of birth left missing");
    }
    (estimate.size() == 2 ? two : estimate.size() == 1 ? one : none) += 1;
    estimates.push_back(std::move(estimate));
  }
  const Dataset prepared =
      with_birth_month_column(filtered.kept, estimates, config.birth_month_column);

  std::ostringstream csv;
  write_csv(prepared, csv, config.csv);
  result.output = csv.str();

  std::ostringstream summary;
  summary << "waves: " << series.waves().size() << " (" << series.waves().front().month.to_string()
          << " .. " << series.waves().back().month.to_string() << ")\n"
          << "respondents merged: " << merged.num_rows() << "\n"
          << "removed (no background data or no other study): " << filtered.n_removed << "\n"
          << "respondents kept: " << prepared.num_rows() << "\n"
          << "month of birth: " << two << " with two candidates, " << one << " with one, "
          << none << " without an estimate\n";
  result.summary = summary.str();
  return result;
}

CommandOutput run_assess(const RunConfig& config) {
  require(!config.quasi_identifiers.empty(), "'quasi_identifiers' must not be empty");
  if (!config.population_size) {
    throw Error(ErrorCode::kInvalidArgument, "population_size (N) is required for assess");
  }
  const Dataset data = load_input(config);
  const std::uint64_t n_full = config.n_full.value_or(data.num_rows());
  if (n_full < data.num_rows()) {
    throw Error(ErrorCode::kInvalidArgument, "n_full is smaller than the number of input rows");
  }
  const RiskReport report = risk_report(data, config.quasi_identifiers, *config.population_size,
                                        n_full, config.risk);
  CommandOutput result;
  result.output = render_report(report, config.format);
  for (const auto& qi : config.quasi_identifiers) {
    if (config.risk.methods.count(Method::kListwise) && uses_birth_month(data, qi)) {
      result.warnings.push_back("quasi-identifier '" + qi.label() +
                                "' uses an estimated month of birth; listwise record skipped");
    }
  }
  return result;
}

CommandOutput run_simulate(const RunConfig& config) {
  if (!config.simulation) {
    throw Error(ErrorCode::kConfig, "config: 'simulation' section is required for simulate");
  }
  const SimulationSummary summary = simulate(*config.simulation);
  CommandOutput result;
  result.output = render_simulation(summary, *config.simulation, config.format);
  return result;
}

CommandOutput run_oracle(const RunConfig& config) {
  require(!config.quasi_identifiers.empty(), "'quasi_identifiers' must not be empty");
  const Dataset data = load_input(config);
  nlohmann::json out;
  out["rows"] = data.num_rows();
  out["require_observed_overlap"] = config.risk.match.require_observed_overlap;
  out["quasi_identifiers"] = nlohmann::json::array();
  CommandOutput result;
  std::ostringstream summary;
  for (const auto& qi : config.quasi_identifiers) {
    const auto reference = n_match_reference(data, qi, config.risk.match);
    const auto indexed = MatchIndex(data, qi).count_all(config.risk.match);
    nlohmann::json mismatches = nlohmann::json::array();
    for (std::size_t r = 0; r < reference.size(); ++r) {
      if (reference[r] != indexed[r]) {
        mismatches.push_back(
            {{"id", data.id(r)}, {"reference", reference[r]}, {"indexed", indexed[r]}});
      }
    }
    const bool equal = mismatches.empty();
    result.ok = result.ok && equal;
    out["quasi_identifiers"].push_back({{"label", qi.label()},
                                        {"variables", qi.variables()},
                                        {"reference_counts", reference},
                                        {"equal", equal},
                                        {"mismatches", mismatches}});
    summary << qi.label() << ": " << (equal ? "indexed == reference" : "MISMATCH") << " ("
            << mismatches.size() << " differing rows)\n";
  }
  out["all_equal"] = result.ok;
  result.output = out.dump(2) + "\n";
  result.summary = summary.str();
  return result;
}

}  // namespace reid
