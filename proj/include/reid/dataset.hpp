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

#ifndef REID_DATASET_HPP_
#define REID_DATASET_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "reid/birth_month.hpp"

namespace reid {

enum class VariableKind {
  kCategorical,
  kInteger,
  // Estimated month of birth: zero, one or two candidate months per cell.
  kBirthMonth,
};

enum class VariableRole { kBackground, kStudy, kDerived };

std::string_view to_string(VariableKind kind);
std::string_view to_string(VariableRole role);
VariableKind parse_variable_kind(std::string_view text);
VariableRole parse_variable_role(std::string_view text);

struct VariableSpec {
  std::string name;
  VariableKind kind = VariableKind::kCategorical;
  VariableRole role = VariableRole::kBackground;
  // Raw CSV strings decoded as missing.
  std::vector<std::string> missing_tokens = {""};

  friend bool operator==(const VariableSpec&, const VariableSpec&) = default;
};

// One cell. The interpretation of the payload depends on the variable kind:
// a dictionary code for categoricals, the number itself for integers, and a
// packed BirthMonthEstimate for birth months. An empty birth-month estimate is
// stored as missing.
class Value {
 public:
  constexpr Value() = default;

  static constexpr Value missing() { return Value(); }
  static constexpr Value integer(std::int64_t v) { return Value(v); }
  static constexpr Value category(std::int32_t code) { return Value(code); }
  static Value months(const BirthMonthEstimate& estimate) {
    return estimate.empty() ? Value() : Value(estimate.pack());
  }

  constexpr bool is_missing() const noexcept { return missing_; }
  constexpr std::int64_t payload() const noexcept { return payload_; }
  std::int32_t code() const noexcept { return static_cast<std::int32_t>(payload_); }

  // Structural equality; missing == missing. Pattern matching in the analysis
  // modules never treats missing as equal to an observed value.
  friend constexpr bool operator==(const Value&, const Value&) = default;

 private:
  constexpr explicit Value(std::int64_t payload) : missing_(false), payload_(payload) {}

  bool missing_ = true;
  std::int64_t payload_ = 0;
};

class DatasetBuilder;

// Rectangular respondent x variable table. Immutable once built; all const
// member functions are safe to call concurrently.
class Dataset {
 public:
  Dataset() = default;

  std::size_t num_rows() const noexcept { return ids_.size(); }
  std::size_t num_variables() const noexcept { return schema_.size(); }

  const std::vector<VariableSpec>& schema() const noexcept { return schema_; }
  const VariableSpec& spec(std::size_t var) const { return schema_.at(var); }
  const std::vector<std::string>& respondent_ids() const noexcept { return ids_; }
  const std::string& id(std::size_t row) const { return ids_.at(row); }

  std::optional<std::size_t> find_row(std::string_view id) const;
  std::optional<std::size_t> find_variable(std::string_view name) const;
  // Throws Error(kInvalidArgument) naming the variable.
  std::size_t variable_index(std::string_view name) const;

  const Value& cell(std::size_t row, std::size_t var) const {
    return columns_[var].cells[row];
  }
  const std::vector<Value>& column(std::size_t var) const { return columns_.at(var).cells; }

  // Labels of a categorical variable, indexed by code, in first-appearance
  // order.
  const std::vector<std::string>& dictionary(std::size_t var) const {
    return columns_.at(var).dictionary;
  }
  const std::string& label(std::size_t var, std::int32_t code) const {
    return columns_.at(var).dictionary.at(static_cast<std::size_t>(code));
  }
  std::optional<std::int32_t> find_code(std::size_t var, std::string_view label) const;

  // Decoded text of a cell; missing renders as "".
  std::string format_cell(std::size_t row, std::size_t var) const;

  // Keeps the given rows in the given order. Dictionaries are carried over.
  Dataset select_rows(std::span<const std::size_t> rows) const;
  // Keeps the named variables in the given order; rows untouched.
  Dataset project(std::span<const std::string> names) const;

 private:
  friend class DatasetBuilder;

  struct Column {
    std::vector<Value> cells;
    std::vector<std::string> dictionary;
    std::unordered_map<std::string, std::int32_t> codes;
  };

  std::vector<VariableSpec> schema_;
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> row_by_id_;
  std::vector<Column> columns_;
};

// Row-at-a-time construction. Cells of a freshly added row start missing; the
// set_* calls address the most recently added row.
class DatasetBuilder {
 public:
  explicit DatasetBuilder(std::vector<VariableSpec> schema);

  // Throws Error(kInvalidArgument) on a duplicate id.
  std::size_t add_row(std::string id);

  void set_missing(std::size_t var);
  void set_integer(std::size_t var, std::int64_t value);
  void set_label(std::size_t var, std::string_view label);
  void set_months(std::size_t var, const BirthMonthEstimate& estimate);
  // Decodes raw text according to the variable's kind and missing tokens.
  // Throws Error(kParse) on malformed input; the caller adds coordinates.
  void set_text(std::size_t var, std::string_view text);
  // Copies a decoded cell from another dataset with a compatible variable.
  void copy_cell(std::size_t var, const Dataset& source, std::size_t row,
                 std::size_t source_var);

  std::size_t num_rows() const noexcept { return data_.ids_.size(); }
  const std::vector<VariableSpec>& schema() const noexcept { return data_.schema_; }

  Dataset build() &&;

 private:
  Value& current(std::size_t var);

  Dataset data_;
};

// True when both datasets have the same schema, ids and decoded cells.
bool cells_equal(const Dataset& a, const Dataset& b);

struct CsvOptions {
  // Column holding respondent ids. When the header lacks it, ids are the
  // 1-based data row numbers.
  std::string id_column = "id";
};

Dataset load_csv(const std::string& path, const std::vector<VariableSpec>& schema,
                 const CsvOptions& options = {});
Dataset parse_csv(std::istream& in, const std::vector<VariableSpec>& schema,
                  const CsvOptions& options = {}, const std::string& source = "<input>");

// Header is the id column followed by every variable; missing cells are
// written as empty fields.
void write_csv(const Dataset& dataset, std::ostream& out, const CsvOptions& options = {});
void save_csv(const Dataset& dataset, const std::string& path, const CsvOptions& options = {});

}  // namespace reid

#endif  // REID_DATASET_HPP_
