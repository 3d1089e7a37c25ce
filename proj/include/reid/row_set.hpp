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

#ifndef REID_ROW_SET_HPP_
#define REID_ROW_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace reid {

// Dense bit-per-row set over rows [0, size). Bits past size() are always zero.
class RowSet {
 public:
  RowSet() = default;
  explicit RowSet(std::size_t size, bool filled = false)
      : size_(size), words_((size + 63) / 64, filled ? ~std::uint64_t{0} : 0) {
    if (filled) clear_tail();
  }

  std::size_t size() const noexcept { return size_; }

  void set(std::size_t row) { words_[row >> 6] |= std::uint64_t{1} << (row & 63); }
  void reset(std::size_t row) { words_[row >> 6] &= ~(std::uint64_t{1} << (row & 63)); }
  bool test(std::size_t row) const {
    return (words_[row >> 6] >> (row & 63)) & 1U;
  }

  std::size_t count() const noexcept {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  void fill() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    clear_tail();
  }

  RowSet& operator&=(const RowSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  RowSet& operator|=(const RowSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  // Complement within [0, size).
  RowSet operator~() const {
    RowSet out = *this;
    for (auto& w : out.words_) w = ~w;
    out.clear_tail();
    return out;
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        rows.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return rows;
  }

  std::vector<std::uint64_t>& words() noexcept { return words_; }
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const RowSet&, const RowSet&) = default;

 private:
  void clear_tail() {
    if (size_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace reid

#endif  // REID_ROW_SET_HPP_
