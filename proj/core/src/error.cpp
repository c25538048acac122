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

#include "segaug/error.hpp"

namespace segaug {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidTranscript: return "invalid-transcript";
    case ErrorCode::kInfeasibleAlignment: return "infeasible-alignment";
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kDegenerateInput: return "degenerate-input";
    case ErrorCode::kMissingWord: return "missing-word";
    case ErrorCode::kConfiguration: return "configuration";
    case ErrorCode::kFormat: return "format";
    case ErrorCode::kUnsupported: return "unsupported";
    case ErrorCode::kTruncated: return "truncated";
    case ErrorCode::kInvalidDistribution: return "invalid-distribution";
    case ErrorCode::kParameter: return "parameter";
    case ErrorCode::kIncompatiblePair: return "incompatible-pair";
    case ErrorCode::kUndefinedMetric: return "undefined-metric";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace segaug
