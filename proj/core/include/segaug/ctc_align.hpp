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

#ifndef SEGAUG_CTC_ALIGN_HPP_
#define SEGAUG_CTC_ALIGN_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "segaug/posterior_grid.hpp"
#include "segaug/vocab.hpp"

namespace segaug {

/// Transcript interleaved with blanks: blank, y1, blank, y2, ..., blank.
/// Even positions hold the blank id; length is 2U+1.
struct BlankAugmentedTarget {
  std::vector<SymbolId> states;
  SymbolId blank_id = 0;

  std::size_t num_labels() const { return states.size() / 2; }
  bool IsBlankState(std::size_t state) const { return state % 2 == 0; }
  /// Character index (into the transcript) of a non-blank state.
  static std::size_t CharIndex(std::size_t state) { return (state - 1) / 2; }
  /// True when entering `state` by skipping the blank before it is allowed.
  bool CanSkipInto(std::size_t state) const {
    return state >= 2 && !IsBlankState(state) &&
           states[state] != states[state - 2];
  }
  /// Fewest frames that can emit every label: U plus one per repeated pair.
  std::size_t MinFrames() const;
};

BlankAugmentedTarget ExpandWithBlanks(const std::vector<SymbolId>& char_ids,
                                      const Vocab& vocab);

/// Best path: one index into the blank-augmented target per frame.
struct AlignmentPath {
  std::vector<std::int32_t> states;
  double log_prob = 0.0;
};

enum class BacktrackStart {
  /// Final state must be the last label or the trailing blank, so every
  /// label is emitted.
  kFullCoverage,
  /// Final state is the unconstrained argmax over all states.
  kUnconstrained,
};

struct AlignOptions {
  BacktrackStart backtrack_start = BacktrackStart::kFullCoverage;
};

/// Viterbi forced alignment in the log domain.
///
/// Paths start in state 0 or 1 and advance by 0, 1 or 2 states per frame;
/// a skip of 2 is only legal into a label that differs from the label two
/// states back. On score ties the predecessor is chosen in the order
/// stay, step-1, step-2, and the final state by lowest index.
///
/// Throws kDimensionMismatch if a target symbol lies outside the grid,
/// kInfeasibleAlignment if full coverage needs more frames than the grid
/// has, and kDegenerateInput if every admissible path has zero probability.
AlignmentPath AlignPath(const LogPosteriorGrid& grid,
                        const BlankAugmentedTarget& target,
                        const AlignOptions& options = {});

/// True iff `path` obeys the start, step-size and skip rules for `target`.
bool IsValidPath(const std::vector<std::int32_t>& states,
                 const BlankAugmentedTarget& target);

/// Sum over frames of grid[t][target[path[t]]].
double PathLogProb(const LogPosteriorGrid& grid,
                   const BlankAugmentedTarget& target,
                   const std::vector<std::int32_t>& states);

}  // namespace segaug

#endif  // SEGAUG_CTC_ALIGN_HPP_
