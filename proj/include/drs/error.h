// Copyright 2026 The drs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DRS_ERROR_H_
#define DRS_ERROR_H_

#include <stdexcept>
#include <string>

namespace drs {

enum class ErrorCode {
  kParse,            // malformed graph text, bad vertex index, loop, duplicate
  kInvalidArgument,  // a precondition on parameters does not hold
  kDisconnected,     // operation requires a connected graph
  kOverCap,          // exact solver refuses graphs above its order cap
  kNotApplicable,    // structural precondition of a construction fails
};

const char* ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above; the
// CLI maps them onto process exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace drs

#endif  // DRS_ERROR_H_
