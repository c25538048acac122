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

#include "segaug/posterior_grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "segaug/error.hpp"

namespace segaug {

double LogSumExp(std::span<const double> v) {
  double hi = -std::numeric_limits<double>::infinity();
  for (double x : v) hi = std::max(hi, x);
  if (!std::isfinite(hi)) return hi;
  double acc = 0.0;
  for (double x : v) acc += std::exp(x - hi);
  return hi + std::log(acc);
}

LogPosteriorGrid::LogPosteriorGrid(std::size_t num_frames,
                                   std::size_t num_symbols,
                                   std::vector<double> values,
                                   double tolerance)
    : num_frames_(num_frames),
      num_symbols_(num_symbols),
      values_(std::move(values)) {
  if (num_frames_ == 0 || num_symbols_ == 0) {
    throw Error(ErrorCode::kDimensionMismatch,
                "posterior grid needs at least one frame and one symbol");
  }
  if (values_.size() != num_frames_ * num_symbols_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "posterior grid holds " + std::to_string(values_.size()) +
                    " values, expected " +
                    std::to_string(num_frames_ * num_symbols_));
  }
  for (std::size_t t = 0; t < num_frames_; ++t) {
    const auto r = row(t);
    for (double x : r) {
      if (std::isnan(x) || x > tolerance) {
        throw Error(ErrorCode::kInvalidDistribution,
                    "frame " + std::to_string(t) +
                        " has a value that is not a log-probability");
      }
    }
    const double z = LogSumExp(r);
    if (!(std::abs(z) <= tolerance)) {
      throw Error(ErrorCode::kInvalidDistribution,
                  "frame " + std::to_string(t) + " log-sum-exp is " +
                      std::to_string(z));
    }
  }
}

}  // namespace segaug
