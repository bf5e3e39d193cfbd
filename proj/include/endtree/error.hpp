// Copyright 2026 The endtree Authors
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

#ifndef ENDTREE_ERROR_HPP_
#define ENDTREE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace endtree {

enum class ErrorCode {
  kUniverseMismatch,
  kNotInSystem,
  kNotNested,
  kNotSelfDual,
  kMixedComponents,
  kHostMismatch,
  kNotMultiEnded,
  kWindowTooSmall,
  kOutsideMargin,
  kNestednessViolation,
  kPreconditionViolated,
  kInvariantViolation,
  kTooLarge,
  kParse,
  kInvalidArgument,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUniverseMismatch: return "UniverseMismatch";
    case ErrorCode::kNotInSystem: return "NotInSystem";
    case ErrorCode::kNotNested: return "NotNested";
    case ErrorCode::kNotSelfDual: return "NotSelfDual";
    case ErrorCode::kMixedComponents: return "MixedComponents";
    case ErrorCode::kHostMismatch: return "HostMismatch";
    case ErrorCode::kNotMultiEnded: return "NotMultiEnded";
    case ErrorCode::kWindowTooSmall: return "WindowTooSmall";
    case ErrorCode::kOutsideMargin: return "OutsideMargin";
    case ErrorCode::kNestednessViolation: return "NestednessViolation";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// All library failures are reported through this type. The code tells the
// caller whether retrying with a larger window can help (kWindowTooSmall,
// kNotMultiEnded), whether a mathematical invariant broke (kNotNested and
// friends when raised internally), or whether the input was malformed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// True for errors that mean "the window or input did not allow a decision",
// as opposed to a violated invariant.
inline bool is_retryable(ErrorCode code) {
  return code == ErrorCode::kWindowTooSmall ||
         code == ErrorCode::kNotMultiEnded ||
         code == ErrorCode::kOutsideMargin;
}

inline bool is_invariant_violation(ErrorCode code) {
  return code == ErrorCode::kNestednessViolation ||
         code == ErrorCode::kInvariantViolation;
}

}  // namespace endtree

#endif  // ENDTREE_ERROR_HPP_
