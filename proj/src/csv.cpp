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

#include "reid/csv.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "reid/error.hpp"

namespace reid::csv {

bool Reader::next(Record& record) {
  record.clear();
  if (!started_) {
    started_ = true;
    if (in_.peek() == 0xEF) {
      char bom[3];
      in_.read(bom, 3);
      if (!(in_.gcount() == 3 && static_cast<unsigned char>(bom[1]) == 0xBB &&
            static_cast<unsigned char>(bom[2]) == 0xBF)) {
        in_.clear();
        in_.seekg(0);
      }
    }
  }
  if (in_.peek() == std::char_traits<char>::eof()) return false;

  record_line_ = physical_line_;
  std::string field;
  bool quoted = false;
  bool after_quote = false;
  int c;
  while ((c = in_.get()) != std::char_traits<char>::eof()) {
    const char ch = static_cast<char>(c);
    if (quoted) {
      if (ch == '"') {
        if (in_.peek() == '"') {
          in_.get();
          field.push_back('"');
        } else {
          quoted = false;
          after_quote = true;
        }
      } else {
        if (ch == '\n') ++physical_line_;
        field.push_back(ch);
      }
      continue;
    }
    if (ch == '"' && field.empty() && !after_quote) {
      quoted = true;
    } else if (ch == ',') {
      record.push_back(std::move(field));
      field.clear();
      after_quote = false;
    } else if (ch == '\r' && in_.peek() == '\n') {
      // swallowed; the '\n' ends the record
    } else if (ch == '\n') {
      ++physical_line_;
      record.push_back(std::move(field));
      return true;
    } else {
      field.push_back(ch);
    }
  }
  if (quoted) {
    throw Error(ErrorCode::kParse, "unterminated quoted field starting on line " +
                                       std::to_string(record_line_));
  }
  record.push_back(std::move(field));
  return true;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

void write_record(std::ostream& out, const Record& record) {
  for (std::size_t i = 0; i < record.size(); ++i) {
    if (i > 0) out << ',';
    out << escape(record[i]);
  }
  out << '\n';
}

std::vector<Record> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  Reader reader(in);
  std::vector<Record> records;
  Record record;
  while (reader.next(record)) records.push_back(record);
  return records;
}

}  // namespace reid::csv
