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

#ifndef REID_CONFIG_HPP_
#define REID_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reid/attack_sim.hpp"
#include "reid/dataset.hpp"
#include "reid/quasi_identifier.hpp"
#include "reid/risk.hpp"

namespace reid {

enum class OutputFormat { kText, kJson, kCsv };

OutputFormat parse_output_format(std::string_view text);

// Everything one CLI invocation needs. Relative paths in the JSON are
// resolved against `base_dir` (the directory of the config file).
struct RunConfig {
  // Data sources.
  std::string input;          // merged CSV (assess, oracle)
  std::string waves_dir;      // prep
  std::string participation;  // prep
  std::string age_variable = "age";
  std::string birth_month_column = "mob_candidates";
  CsvOptions csv;
  std::vector<VariableSpec> schema;

  // Analysis.
  std::vector<QuasiIdentifier> quasi_identifiers;
  std::optional<std::uint64_t> population_size;
  std::optional<std::uint64_t> n_full;
  RiskOptions risk;

  OutputFormat format = OutputFormat::kText;
  std::uint64_t seed = 0;
  unsigned threads = 1;

  std::optional<SimulationConfig> simulation;
};

// Throws Error(kConfig) on malformed JSON or fields, and
// Error(kInvalidArgument) when a quasi-identifier names a variable missing
// from the schema.
RunConfig parse_run_config(std::string_view json_text, const std::string& base_dir = ".");

}  // namespace reid

#endif  // REID_CONFIG_HPP_
