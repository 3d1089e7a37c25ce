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

#ifndef REID_REPORT_HPP_
#define REID_REPORT_HPP_

#include <string>

#include "reid/attack_sim.hpp"
#include "reid/config.hpp"
#include "reid/risk.hpp"

namespace reid {

// Text tables use the column layout of the listwise and n_match result
// tables, proportions and theta to 4 decimals, and "−" for unreliable theta.
// JSON keeps full precision plus reliability flags.
std::string render_report(const RiskReport& report, OutputFormat format);

std::string render_simulation(const SimulationSummary& summary, const SimulationConfig& config,
                              OutputFormat format);

// Fixed-point rounding used by the text renderer.
std::string format_fixed(double value, int decimals = 4);

}  // namespace reid

#endif  // REID_REPORT_HPP_
