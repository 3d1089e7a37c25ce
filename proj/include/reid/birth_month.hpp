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

#ifndef REID_BIRTH_MONTH_HPP_
#define REID_BIRTH_MONTH_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace reid {

// Zero, one or two candidate calendar months (1-12). With two candidates they
// are cyclically adjacent and stored earlier-first: (M-1, M), so December
// precedes January.
class BirthMonthEstimate {
 public:
  BirthMonthEstimate() = default;
  explicit BirthMonthEstimate(int month);
  BirthMonthEstimate(int earlier, int later);

  // (M-1, M) with wrap-around, for a single observed change month M.
  static BirthMonthEstimate around_change(int change_month);

  const std::vector<int>& candidates() const noexcept { return candidates_; }
  bool empty() const noexcept { return candidates_.empty(); }
  std::size_t size() const noexcept { return candidates_.size(); }
  bool contains(int month) const;
  // The month used when this estimate is the probe value of a match.
  int first() const { return candidates_.front(); }

  // "" / "6" / "5/6". parse() accepts exactly what format() produces.
  std::string format() const;
  static BirthMonthEstimate parse(std::string_view text);

  // Compact packing used for dataset cells: first | second << 4.
  std::int64_t pack() const;
  static BirthMonthEstimate unpack(std::int64_t packed);

  friend bool operator==(const BirthMonthEstimate&, const BirthMonthEstimate&) = default;

 private:
  std::vector<int> candidates_;
};

// Month following `month`, December wrapping to January.
constexpr int next_month(int month) { return month % 12 + 1; }
constexpr int previous_month(int month) { return month == 1 ? 12 : month - 1; }

}  // namespace reid

#endif  // REID_BIRTH_MONTH_HPP_
