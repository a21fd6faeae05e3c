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

#ifndef SRDIFF_ERROR_HPP_
#define SRDIFF_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace srdiff {

enum class ErrorKind {
  kDimensionTooSmall,
  kDimensionMismatch,
  kInputSmallerThanFilter,
  kOutputTooSmall,
  kDegenerateContent,
  kTooFewRecords,
  kUnpartitioned,
  kIdMismatch,
  kZeroVariance,
  kLengthMismatch,
  kInvalidArgument,
  kIo,
  kDecode,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        message_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  // what() without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

}  // namespace srdiff

#endif  // SRDIFF_ERROR_HPP_
