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

#include "reid/quasi_identifier.hpp"

#include <algorithm>

#include "reid/dataset.hpp"
#include "reid/error.hpp"

namespace reid {

QuasiIdentifier::QuasiIdentifier(std::vector<std::string> variables, std::string label)
    : variables_(std::move(variables)), label_(std::move(label)) {
  if (variables_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "quasi-identifier needs at least one variable");
  }
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (std::find(variables_.begin(), variables_.begin() + static_cast<std::ptrdiff_t>(i),
                  variables_[i]) != variables_.begin() + static_cast<std::ptrdiff_t>(i)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "variable '" + variables_[i] + "' repeated in quasi-identifier");
    }
  }
  if (label_.empty()) {
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      if (i > 0) label_ += " + ";
      label_ += variables_[i];
    }
  }
}

std::vector<std::size_t> QuasiIdentifier::resolve(const Dataset& dataset) const {
  std::vector<std::size_t> columns;
  columns.reserve(variables_.size());
  for (const auto& name : variables_) {
    auto index = dataset.find_variable(name);
    if (!index) {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown variable '" + name + "' in quasi-identifier '" + label_ + "'");
    }
    columns.push_back(*index);
  }
  return columns;
}

QuasiIdentifier QuasiIdentifier::extended(const std::string& variable) const {
  auto vars = variables_;
  vars.push_back(variable);
  return QuasiIdentifier(std::move(vars));
}

}  // namespace reid
