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

#ifndef SEGAUG_POSTERIOR_GRID_HPP_
#define SEGAUG_POSTERIOR_GRID_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace segaug {

/// T x S matrix of per-frame natural-log posteriors, row-major.
///
/// Construction validates that every row log-sum-exps to 0 within
/// `tolerance` and that no value exceeds `tolerance`.
class LogPosteriorGrid {
 public:
  static constexpr double kDefaultTolerance = 1e-3;

  LogPosteriorGrid(std::size_t num_frames, std::size_t num_symbols,
                   std::vector<double> values,
                   double tolerance = kDefaultTolerance);

  std::size_t num_frames() const { return num_frames_; }
  std::size_t num_symbols() const { return num_symbols_; }

  double at(std::size_t frame, std::size_t symbol) const {
    return values_[frame * num_symbols_ + symbol];
  }
  std::span<const double> row(std::size_t frame) const {
    return {values_.data() + frame * num_symbols_, num_symbols_};
  }
  std::span<const double> values() const { return values_; }

 private:
  std::size_t num_frames_;
  std::size_t num_symbols_;
  std::vector<double> values_;
};

/// log(sum(exp(v))) with -inf handling.
double LogSumExp(std::span<const double> v);

}  // namespace segaug

#endif  // SEGAUG_POSTERIOR_GRID_HPP_
