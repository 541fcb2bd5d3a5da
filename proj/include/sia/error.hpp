// Copyright 2026 The SIA Authors.
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

#ifndef SIA_ERROR_HPP_
#define SIA_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sia {

enum class ErrorCode {
  kDimensionMismatch,
  kNegativeValue,
  kEmptyDimension,
  kParseError,
  kInvalidConfig,
  kNonDecimalRational,
  kMalformedProblem,
  kHardCapExceeded,
  kInfeasibleInstance,
  kSearchSpaceTooLarge,
  kOddSum,
  kSolverLimitHit,
  kTooManyUnsolved,
  kIoFailure,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported as sia::Error carrying a stable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sia

#endif  // SIA_ERROR_HPP_
