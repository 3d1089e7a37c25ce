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

#include "reid/birth_month.hpp"

#include <charconv>

#include "reid/error.hpp"

namespace reid {
namespace {

void check_month(int month) {
  if (month < 1 || month > 12) {
    throw Error(ErrorCode::kInvalidArgument,
                "month out of range 1-12: " + std::to_string(month));
  }
}

int parse_month(std::string_view text, std::string_view whole) {
  int month = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), month);
  if (ec != std::errc() || ptr != text.data() + text.size() || month < 1 || month > 12) {
    throw Error(ErrorCode::kParse,
                "invalid month-of-birth candidates '" + std::string(whole) + "'");
  }
  return month;
}

}  // namespace

BirthMonthEstimate::BirthMonthEstimate(int month) {
  check_month(month);
  candidates_ = {month};
}

BirthMonthEstimate::BirthMonthEstimate(int earlier, int later) {
  check_month(earlier);
  check_month(later);
  if (next_month(earlier) != later) {
    throw Error(ErrorCode::kInvalidArgument,
                "birth month candidates must be adjacent: " + std::to_string(earlier) +
                    "/" + std::to_string(later));
  }
  candidates_ = {earlier, later};
}

BirthMonthEstimate BirthMonthEstimate::around_change(int change_month) {
  return BirthMonthEstimate(previous_month(change_month), change_month);
}

bool BirthMonthEstimate::contains(int month) const {
  for (int c : candidates_) {
    if (c == month) return true;
  }
  return false;
}

std::string BirthMonthEstimate::format() const {
  std::string out;
  for (std::size_t i = 0; i < candidates_.size(); ++i) {
    if (i > 0) out.push_back('/');
    out += std::to_string(candidates_[i]);
  }
  return out;
}

BirthMonthEstimate BirthMonthEstimate::parse(std::string_view text) {
  if (text.empty()) return {};
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BirthMonthEstimate(parse_month(text, text));
  const int a = parse_month(text.substr(0, slash), text);
  const int b = parse_month(text.substr(slash + 1), text);
  if (next_month(a) != b) {
    throw Error(ErrorCode::kParse,
                "month-of-birth candidates not adjacent: '" + std::string(text) + "'");
  }
  return BirthMonthEstimate(a, b);
}

std::int64_t BirthMonthEstimate::pack() const {
  std::int64_t packed = 0;
  for (std::size_t i = 0; i < candidates_.size(); ++i) {
    packed |= static_cast<std::int64_t>(candidates_[i]) << (4 * i);
  }
  return packed;
}

BirthMonthEstimate BirthMonthEstimate::unpack(std::int64_t packed) {
  const int a = static_cast<int>(packed & 0xF);
  const int b = static_cast<int>((packed >> 4) & 0xF);
  if (a == 0) return {};
  if (b == 0) return BirthMonthEstimate(a);
  return BirthMonthEstimate(a, b);
}

}  // namespace reid
