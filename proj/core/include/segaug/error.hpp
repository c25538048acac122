// Copyright (c) 2026, The segaug Authors. All rights reserved.
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

#ifndef SEGAUG_ERROR_HPP_
#define SEGAUG_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace segaug {

enum class ErrorCode {
  kInvalidTranscript,
  kInfeasibleAlignment,
  kDimensionMismatch,
  kDegenerateInput,
  kMissingWord,
  kConfiguration,
  kFormat,
  kUnsupported,
  kTruncated,
  kInvalidDistribution,
  kParameter,
  kIncompatiblePair,
  kUndefinedMetric,
  kIo,
};

/// Stable kebab-case name, used in reject files and CLI diagnostics.
std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace segaug

#endif  // SEGAUG_ERROR_HPP_
