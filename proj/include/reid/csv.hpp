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

#ifndef REID_CSV_HPP_
#define REID_CSV_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace reid::csv {

using Record = std::vector<std::string>;

// RFC 4180 reader: quoted fields may contain commas, doubled quotes and line
// breaks; CRLF and LF line endings are both accepted; a leading UTF-8 BOM is
// dropped. `line` reports the 1-based physical line on which each record
// starts, for error messages.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  // Returns false at end of input.
  bool next(Record& record);
  std::size_t line() const noexcept { return record_line_; }

 private:
  std::istream& in_;
  std::size_t physical_line_ = 1;
  std::size_t record_line_ = 0;
  bool started_ = false;
};

// Quotes a field only when it contains a delimiter, quote or line break.
std::string escape(std::string_view field);
void write_record(std::ostream& out, const Record& record);

// Reads a whole file. Throws reid::Error(kIo) when it cannot be opened and
// reid::Error(kParse) on an unterminated quoted field.
std::vector<Record> read_file(const std::string& path);

}  // namespace reid::csv

#endif  // REID_CSV_HPP_
