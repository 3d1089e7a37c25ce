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

#ifndef REID_ERROR_HPP_
#define REID_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace reid {

// Error categories. The C API maps each one onto a status code, and the CLI
// maps those onto exit codes (usage-type errors exit 2, the rest exit 1).
enum class ErrorCode {
  kInvalidArgument,
  kConfig,
  kIo,
  kParse,
  kInconsistentAges,
  kVerification,
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace reid

#endif  // REID_ERROR_HPP_
