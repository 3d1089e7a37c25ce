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

#ifndef REID_QUASI_IDENTIFIER_HPP_
#define REID_QUASI_IDENTIFIER_HPP_

#include <string>
#include <vector>

namespace reid {

class Dataset;

// Ordered, non-empty list of distinct variable names used as a matching key.
class QuasiIdentifier {
 public:
  // Throws Error(kInvalidArgument) when empty or when a name repeats. An empty
  // label is replaced by the names joined with " + ".
  explicit QuasiIdentifier(std::vector<std::string> variables, std::string label = "");

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t size() const noexcept { return variables_.size(); }

  // Column indices of the variables in `dataset`. Throws Error(kInvalidArgument)
  // naming the first unknown variable.
  std::vector<std::size_t> resolve(const Dataset& dataset) const;

  // A copy with one more variable appended.
  QuasiIdentifier extended(const std::string& variable) const;

  friend bool operator==(const QuasiIdentifier&, const QuasiIdentifier&) = default;

 private:
  std::vector<std::string> variables_;
  std::string label_;
};

}  // namespace reid

#endif  // REID_QUASI_IDENTIFIER_HPP_
