// Copyright 2026 The srdiff Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "srdiff/error.hpp"

namespace srdiff {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimensionTooSmall: return "dimension-too-small";
    case ErrorKind::kDimensionMismatch: return "dimension-mismatch";
    case ErrorKind::kInputSmallerThanFilter: return "input-smaller-than-filter";
    case ErrorKind::kOutputTooSmall: return "output-too-small";
    case ErrorKind::kDegenerateContent: return "degenerate-content";
    case ErrorKind::kTooFewRecords: return "too-few-records";
    case ErrorKind::kUnpartitioned: return "unpartitioned";
    case ErrorKind::kIdMismatch: return "id-mismatch";
    case ErrorKind::kZeroVariance: return "zero-variance";
    case ErrorKind::kLengthMismatch: return "length-mismatch";
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kDecode: return "decode";
  }
  return "unknown";
}

}  // namespace srdiff
