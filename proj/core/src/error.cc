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

#include "aerspike/error.h"

#include <string>

namespace aerspike {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kTruncatedRecord: return "TruncatedRecord";
    case ErrorCode::kOutOfBounds: return "OutOfBounds";
    case ErrorCode::kTimestampOverflow: return "TimestampOverflow";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kGeometryMismatch: return "GeometryMismatch";
    case ErrorCode::kEmptyStream: return "EmptyStream";
    case ErrorCode::kOutOfOrderEvent: return "OutOfOrderEvent";
    case ErrorCode::kNegativeTime: return "NegativeTime";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNonFiniteWeight: return "NonFiniteWeight";
    case ErrorCode::kNonFiniteInput: return "NonFiniteInput";
    case ErrorCode::kStaleCache: return "StaleCache";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kEmptyDataset: return "EmptyDataset";
    case ErrorCode::kUnlabeledEvent: return "UnlabeledEvent";
    case ErrorCode::kNotASubset: return "NotASubset";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kCheckpointError: return "CheckpointError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace aerspike
