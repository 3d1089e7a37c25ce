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

#include "reid/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "reid/csv.hpp"
#include "reid/error.hpp"

namespace reid {

std::string_view to_string(VariableKind kind) {
  switch (kind) {
    case VariableKind::kCategorical: return "categorical";
    case VariableKind::kInteger: return "integer";
    case VariableKind::kBirthMonth: return "birth_month";
  }
  return "?";
}

std::string_view to_string(VariableRole role) {
  switch (role) {
    case VariableRole::kBackground: return "background";
    case VariableRole::kStudy: return "study";
    case VariableRole::kDerived: return "derived";
  }
  return "?";
}

VariableKind parse_variable_kind(std::string_view text) {
  if (text == "categorical") return VariableKind::kCategorical;
  if (text == "integer") return VariableKind::kInteger;
  if (text == "birth_month") return VariableKind::kBirthMonth;
  throw Error(ErrorCode::kConfig, "unknown variable kind '" + std::string(text) + "'");
}

VariableRole parse_variable_role(std::string_view text) {
  if (text == "background") return VariableRole::kBackground;
  if (text == "study") return VariableRole::kStudy;
  if (text == "derived") return VariableRole::kDerived;
  throw Error(ErrorCode::kConfig, "unknown variable role '" + std::string(text) + "'");
}

std::optional<std::size_t> Dataset::find_row(std::string_view id) const {
  const auto it = row_by_id_.find(std::string(id));
  if (it == row_by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Dataset::find_variable(std::string_view name) const {
  for (std::size_t i = 0; i < schema_.size(); ++i) {
    if (schema_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Dataset::variable_index(std::string_view name) const {
  if (auto index = find_variable(name)) return *index;
  throw Error(ErrorCode::kInvalidArgument, "unknown variable '" + std::string(name) + "'");
}

std::optional<std::int32_t> Dataset::find_code(std::size_t var, std::string_view label) const {
  const auto& codes = columns_.at(var).codes;
  const auto it = codes.find(std::string(label));
  if (it == codes.end()) return std::nullopt;
  return it->second;
}

std::string Dataset::format_cell(std::size_t row, std::size_t var) const {
  const Value& v = cell(row, var);
  if (v.is_missing()) return {};
  switch (schema_[var].kind) {
    case VariableKind::kCategorical: return label(var, v.code());
    case VariableKind::kInteger: return std::to_string(v.payload());
    case VariableKind::kBirthMonth: return BirthMonthEstimate::unpack(v.payload()).format();
  }
  return {};
}

Dataset Dataset::select_rows(std::span<const std::size_t> rows) const {
  Dataset out;
  out.schema_ = schema_;
  out.ids_.reserve(rows.size());
  for (std::size_t r : rows) {
    out.row_by_id_.emplace(ids_.at(r), out.ids_.size());
    out.ids_.push_back(ids_[r]);
  }
  out.columns_.resize(columns_.size());
  for (std::size_t v = 0; v < columns_.size(); ++v) {
    out.columns_[v].dictionary = columns_[v].dictionary;
    out.columns_[v].codes = columns_[v].codes;
    auto& cells = out.columns_[v].cells;
    cells.reserve(rows.size());
    for (std::size_t r : rows) cells.push_back(columns_[v].cells[r]);
  }
  return out;
}

Dataset Dataset::project(std::span<const std::string> names) const {
  Dataset out;
  out.ids_ = ids_;
  out.row_by_id_ = row_by_id_;
  for (const auto& name : names) {
    const std::size_t v = variable_index(name);
    out.schema_.push_back(schema_[v]);
    out.columns_.push_back(columns_[v]);
  }
  return out;
}

DatasetBuilder::DatasetBuilder(std::vector<VariableSpec> schema) {
  std::unordered_set<std::string> seen;
  for (const auto& spec : schema) {
    if (!seen.insert(spec.name).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate variable '" + spec.name + "'");
    }
  }
  data_.schema_ = std::move(schema);
  data_.columns_.resize(data_.schema_.size());
}

std::size_t DatasetBuilder::add_row(std::string id) {
  const std::size_t row = data_.ids_.size();
  if (!data_.row_by_id_.emplace(id, row).second) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate respondent id '" + id + "'");
  }
  data_.ids_.push_back(std::move(id));
  for (auto& column : data_.columns_) column.cells.emplace_back();
  return row;
}

Value& DatasetBuilder::current(std::size_t var) {
  if (data_.ids_.empty()) {
    throw Error(ErrorCode::kInternal, "DatasetBuilder: no row added yet");
  }
  return data_.columns_.at(var).cells.back();
}

void DatasetBuilder::set_missing(std::size_t var) { current(var) = Value::missing(); }

void DatasetBuilder::set_integer(std::size_t var, std::int64_t value) {
  current(var) = Value::integer(value);
}

void DatasetBuilder::set_label(std::size_t var, std::string_view label) {
  auto& column = data_.columns_.at(var);
  auto [it, inserted] = column.codes.emplace(std::string(label),
                                             static_cast<std::int32_t>(column.dictionary.size()));
  if (inserted) column.dictionary.emplace_back(label);
  current(var) = Value::category(it->second);
}

void DatasetBuilder::set_months(std::size_t var, const BirthMonthEstimate& estimate) {
  current(var) = Value::months(estimate);
}

void DatasetBuilder::set_text(std::size_t var, std::string_view text) {
  const VariableSpec& spec = data_.schema_.at(var);
  if (std::find(spec.missing_tokens.begin(), spec.missing_tokens.end(), text) !=
      spec.missing_tokens.end()) {
    set_missing(var);
    return;
  }
  switch (spec.kind) {
    case VariableKind::kCategorical:
      set_label(var, text);
      return;
    case VariableKind::kInteger: {
      std::string_view digits = text;
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      std::int64_t value = 0;
      const auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw Error(ErrorCode::kParse, "'" + std::string(text) + "' is not an integer");
      }
      set_integer(var, value);
      return;
    }
    case VariableKind::kBirthMonth:
      set_months(var, BirthMonthEstimate::parse(text));
      return;
  }
}

void DatasetBuilder::copy_cell(std::size_t var, const Dataset& source, std::size_t row,
                               std::size_t source_var) {
  const Value& v = source.cell(row, source_var);
  if (v.is_missing()) {
    set_missing(var);
  } else if (source.spec(source_var).kind == VariableKind::kCategorical) {
    set_label(var, source.label(source_var, v.code()));
  } else {
    current(var) = v;
  }
}

Dataset DatasetBuilder::build() && { return std::move(data_); }

bool cells_equal(const Dataset& a, const Dataset& b) {
  if (a.schema() != b.schema() || a.respondent_ids() != b.respondent_ids()) return false;
  for (std::size_t v = 0; v < a.num_variables(); ++v) {
    for (std::size_t r = 0; r < a.num_rows(); ++r) {
      if (a.cell(r, v).is_missing() != b.cell(r, v).is_missing()) return false;
      if (a.format_cell(r, v) != b.format_cell(r, v)) return false;
    }
  }
  return true;
}

Dataset parse_csv(std::istream& in, const std::vector<VariableSpec>& schema,
                  const CsvOptions& options, const std::string& source) {
  csv::Reader reader(in);
  csv::Record header;
  if (!reader.next(header)) {
    throw Error(ErrorCode::kParse, source + ": missing header row");
  }

  std::optional<std::size_t> id_field;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == options.id_column) id_field = i;
  }
  std::vector<std::size_t> field_of_var;
  for (const auto& spec : schema) {
    const auto it = std::find(header.begin(), header.end(), spec.name);
    if (it == header.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  source + ": column '" + spec.name + "' not found in header");
    }
    field_of_var.push_back(static_cast<std::size_t>(it - header.begin()));
  }

  DatasetBuilder builder(schema);
  csv::Record record;
  std::size_t data_row = 0;
  while (reader.next(record)) {
    if (record.size() == 1 && record[0].empty() && header.size() > 1) continue;
    ++data_row;
    if (record.size() != header.size()) {
      throw Error(ErrorCode::kParse, source + ": line " + std::to_string(reader.line()) +
                                         ": expected " + std::to_string(header.size()) +
                                         " fields, found " + std::to_string(record.size()));
    }
    builder.add_row(id_field ? record[*id_field] : std::to_string(data_row));
    for (std::size_t v = 0; v < schema.size(); ++v) {
      try {
        builder.set_text(v, record[field_of_var[v]]);
      } catch (const Error& e) {
        throw Error(ErrorCode::kParse, source + ": row " + std::to_string(data_row) +
                                           " (line " + std::to_string(reader.line()) +
                                           "), column '" + schema[v].name + "': " + e.what());
      }
    }
  }
  return std::move(builder).build();
}

Dataset load_csv(const std::string& path, const std::vector<VariableSpec>& schema,
                 const CsvOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  return parse_csv(in, schema, options, path);
}

void write_csv(const Dataset& dataset, std::ostream& out, const CsvOptions& options) {
  csv::Record record;
  record.push_back(options.id_column);
  for (const auto& spec : dataset.schema()) record.push_back(spec.name);
  csv::write_record(out, record);
  for (std::size_t r = 0; r < dataset.num_rows(); ++r) {
    record.clear();
    record.push_back(dataset.id(r));
    for (std::size_t v = 0; v < dataset.num_variables(); ++v) {
      record.push_back(dataset.format_cell(r, v));
    }
    csv::write_record(out, record);
  }
}

void save_csv(const Dataset& dataset, const std::string& path, const CsvOptions& options) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  write_csv(dataset, out, options);
  if (!out) throw Error(ErrorCode::kIo, "write failed for '" + path + "'");
}

}  // namespace reid
