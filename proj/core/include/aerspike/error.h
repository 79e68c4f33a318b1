// Copyright 2026 The aerspike Authors
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

#ifndef AERSPIKE_ERROR_H_
#define AERSPIKE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace aerspike {

// Every failure raised by the library carries one of these codes. The CLI
// maps them onto exit-code classes (config, IO, data).
enum class ErrorCode {
  kInvalidArgument,
  kTruncatedRecord,
  kOutOfBounds,
  kTimestampOverflow,
  kParseError,
  kGeometryMismatch,
  kEmptyStream,
  kOutOfOrderEvent,
  kNegativeTime,
  kLengthMismatch,
  kNonFiniteWeight,
  kNonFiniteInput,
  kStaleCache,
  kShapeMismatch,
  kEmptyDataset,
  kUnlabeledEvent,
  kNotASubset,
  kConfigError,
  kIoError,
  kCheckpointError,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Throws Error(code, message) when `condition` is false.
inline void Require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) throw Error(code, message);
}

}  // namespace aerspike

#endif  // AERSPIKE_ERROR_H_
