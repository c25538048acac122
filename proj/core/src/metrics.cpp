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

#include <cstdio>
#include <string>

#include "segaug/error.hpp"
#include "segaug/scoring.hpp"

namespace segaug {

ErrorRates Rates(const ErrorCounts& totals) {
  if (totals.ref_len <= 0) {
    throw Error(ErrorCode::kUndefinedMetric, "WER undefined for empty reference");
  }
  const double scale = 100.0 / static_cast<double>(totals.ref_len);
  return {static_cast<double>(totals.errors()) * scale,
          static_cast<double>(totals.substitutions) * scale,
          static_cast<double>(totals.deletions) * scale,
          static_cast<double>(totals.insertions) * scale};
}

double WerPercent(const ErrorCounts& totals) { return Rates(totals).wer; }

double RelativeReduction(double base, double updated) {
  if (base == 0.0) {
    throw Error(ErrorCode::kUndefinedMetric,
                "relative reduction undefined for a zero baseline");
  }
  return 100.0 * (base - updated) / base;
}

std::string FormatFixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  std::string s = buf;
  // "-0.00" reads as a sign error in reports.
  if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
  return s;
}

std::string FormatInterval(const BootstrapResult& r, int decimals) {
  return FormatFixed(r.mean, decimals) + "_[" + FormatFixed(r.lower, decimals) +
         ", " + FormatFixed(r.upper, decimals) + "]";
}

}  // namespace segaug
