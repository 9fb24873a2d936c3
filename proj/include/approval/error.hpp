// Copyright 2026 The Approval Heuristics Authors.
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

#ifndef APPROVAL_ERROR_HPP
#define APPROVAL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace approval {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidBallot,
  kLengthMismatch,
  kParse,
  kNotFound,
  kDomain,
  kCapacity,
  kIo,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kInvalidBallot: return "invalid ballot";
    case ErrorCode::kLengthMismatch: return "length mismatch";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kNotFound: return "not found";
    case ErrorCode::kDomain: return "domain error";
    case ErrorCode::kCapacity: return "capacity exceeded";
    case ErrorCode::kIo: return "i/o error";
  }
  return "unknown error";
}

/// Every failure raised by the library carries one of the codes above so
/// front ends can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace approval

#endif  // APPROVAL_ERROR_HPP
