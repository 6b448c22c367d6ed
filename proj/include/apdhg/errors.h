// Copyright 2026 The apdhg Authors
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

#ifndef APDHG_ERRORS_H_
#define APDHG_ERRORS_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace apdhg {

enum class ErrorCode {
  kInvalidArgument,
  kUnsupportedOperation,
  kInvalidConfiguration,
  kNumericalBlowup,
  kTuningStall,
  kInternalInconsistency,
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
    case ErrorCode::kUnsupportedOperation:
      return "unsupported-operation";
    case ErrorCode::kInvalidConfiguration:
      return "invalid-configuration";
    case ErrorCode::kNumericalBlowup:
      return "numerical-blowup";
    case ErrorCode::kTuningStall:
      return "tuning-stall";
    case ErrorCode::kInternalInconsistency:
      return "internal-inconsistency";
  }
  return "unknown";
}

// All library failures are reported through this exception. Solver errors
// raised inside the iteration loop carry the (1-based) outer iteration index.
class SolverError : public std::runtime_error {
 public:
  SolverError(ErrorCode code, const std::string& message,
              std::optional<int> iteration = std::nullopt)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        iteration_(iteration) {}

  ErrorCode code() const { return code_; }
  std::optional<int> iteration() const { return iteration_; }

 private:
  ErrorCode code_;
  std::optional<int> iteration_;
};

}  // namespace apdhg

#endif  // APDHG_ERRORS_H_
