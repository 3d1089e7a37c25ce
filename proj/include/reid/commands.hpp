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

#ifndef REID_COMMANDS_HPP_
#define REID_COMMANDS_HPP_

#include <string>
#include <vector>

#include "reid/config.hpp"

namespace reid {

struct CommandOutput {
  std::string output;                  // primary, machine-readable result
  std::string summary;                 // human-readable notes
  std::vector<std::string> warnings;
  bool ok = true;                      // false when a verification failed
};

// Merge waves, drop background-only respondents, estimate month of birth.
// `output` is the resulting CSV.
CommandOutput run_prep(const RunConfig& config);

// Risk report for every configured quasi-identifier and method.
CommandOutput run_assess(const RunConfig& config);

// Synthetic population + journalist attack over the configured replicates.
CommandOutput run_simulate(const RunConfig& config);

// Cross-checks the indexed n_match path against the per-row reference scan.
CommandOutput run_oracle(const RunConfig& config);

}  // namespace reid

#endif  // REID_COMMANDS_HPP_
