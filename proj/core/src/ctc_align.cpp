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

#include "segaug/ctc_align.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "segaug/error.hpp"

namespace segaug {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Backpointer codes: how many states the path advanced into this cell.
constexpr std::int8_t kStay = 0;
constexpr std::int8_t kStep = 1;
constexpr std::int8_t kSkip = 2;

}  // namespace

std::size_t BlankAugmentedTarget::MinFrames() const {
  std::size_t frames = num_labels();
  for (std::size_t s = 3; s < states.size(); s += 2) {
    if (states[s] == states[s - 2]) ++frames;
  }
  return frames;
}

BlankAugmentedTarget ExpandWithBlanks(const std::vector<SymbolId>& char_ids,
                                      const Vocab& vocab) {
  BlankAugmentedTarget target;
  target.blank_id = vocab.blank_id();
  target.states.reserve(2 * char_ids.size() + 1);
  target.states.push_back(vocab.blank_id());
  for (SymbolId id : char_ids) {
    if (!vocab.Contains(id) || id == vocab.blank_id()) {
      throw Error(ErrorCode::kInvalidTranscript,
                  "character id " + std::to_string(id) +
                      " is not a vocab label");
    }
    target.states.push_back(id);
    target.states.push_back(vocab.blank_id());
  }
  return target;
}

AlignmentPath AlignPath(const LogPosteriorGrid& grid,
                        const BlankAugmentedTarget& target,
                        const AlignOptions& options) {
  const std::size_t num_states = target.states.size();
  const std::size_t num_frames = grid.num_frames();
  if (num_states == 0 || num_states % 2 == 0) {
    throw Error(ErrorCode::kInvalidTranscript,
                "blank-augmented target must have odd length");
  }
  for (SymbolId id : target.states) {
    if (id < 0 || static_cast<std::size_t>(id) >= grid.num_symbols()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "target symbol " + std::to_string(id) + " outside grid of " +
                      std::to_string(grid.num_symbols()) + " symbols");
    }
  }
  const bool full_coverage =
      options.backtrack_start == BacktrackStart::kFullCoverage;
  if (full_coverage && num_frames < target.MinFrames()) {
    throw Error(ErrorCode::kInfeasibleAlignment,
                std::to_string(num_frames) + " frames cannot emit a target " +
                    "needing " + std::to_string(target.MinFrames()));
  }

  auto emit = [&](std::size_t t, std::size_t s) {
    return grid.at(t, static_cast<std::size_t>(target.states[s]));
  };

  std::vector<double> prev(num_states, kNegInf);
  std::vector<double> cur(num_states, kNegInf);
  std::vector<std::int8_t> back(num_frames * num_states, kStay);

  prev[0] = emit(0, 0);
  if (num_states > 1) prev[1] = emit(0, 1);

  for (std::size_t t = 1; t < num_frames; ++t) {
    std::int8_t* bp = back.data() + t * num_states;
    for (std::size_t s = 0; s < num_states; ++s) {
      double best = prev[s];
      std::int8_t move = kStay;
      if (s >= 1 && prev[s - 1] > best) {
        best = prev[s - 1];
        move = kStep;
      }
      if (target.CanSkipInto(s) && prev[s - 2] > best) {
        best = prev[s - 2];
        move = kSkip;
      }
      cur[s] = best + emit(t, s);
      bp[s] = move;
    }
    std::swap(prev, cur);
  }

  std::size_t first = 0;
  if (full_coverage && num_states > 1) first = num_states - 2;
  std::size_t final_state = first;
  for (std::size_t s = first + 1; s < num_states; ++s) {
    if (prev[s] > prev[final_state]) final_state = s;
  }
  if (prev[final_state] == kNegInf) {
    throw Error(ErrorCode::kDegenerateInput,
                "every admissible alignment has zero probability");
  }

  AlignmentPath path;
  path.log_prob = prev[final_state];
  path.states.assign(num_frames, 0);
  std::size_t s = final_state;
  for (std::size_t t = num_frames; t-- > 0;) {
    path.states[t] = static_cast<std::int32_t>(s);
    if (t > 0) s -= static_cast<std::size_t>(back[t * num_states + s]);
  }
  return path;
}

bool IsValidPath(const std::vector<std::int32_t>& states,
                 const BlankAugmentedTarget& target) {
  if (states.empty()) return false;
  const auto n = static_cast<std::int32_t>(target.states.size());
  if (states.front() < 0 || states.front() > 1 || states.front() >= n) {
    return false;
  }
  for (std::size_t t = 1; t < states.size(); ++t) {
    const std::int32_t step = states[t] - states[t - 1];
    if (states[t] >= n || step < 0 || step > 2) return false;
    if (step == 2 &&
        !target.CanSkipInto(static_cast<std::size_t>(states[t]))) {
      return false;
    }
  }
  return true;
}

double PathLogProb(const LogPosteriorGrid& grid,
                   const BlankAugmentedTarget& target,
                   const std::vector<std::int32_t>& states) {
  double sum = 0.0;
  for (std::size_t t = 0; t < states.size(); ++t) {
    sum += grid.at(t, static_cast<std::size_t>(
                          target.states[static_cast<std::size_t>(states[t])]));
  }
  return sum;
}

}  // namespace segaug
