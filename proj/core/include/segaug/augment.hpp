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

#ifndef SEGAUG_AUGMENT_HPP_
#define SEGAUG_AUGMENT_HPP_

#include <array>
#include <string_view>
#include <vector>

#include "segaug/draws.hpp"
#include "segaug/utterance.hpp"

namespace segaug {

// Segment-level waveform augmentations. All of them cut at word-segment
// boundaries with no crossfade and no inserted silence.

/// Removes k ~ U{1..floor(n * max_fraction)} distinct words chosen
/// uniformly, keeping the remaining words' audio in order. Identity when
/// that upper bound is 0.
Utterance SegDrop(const Utterance& u, DrawSource& draws,
                  double max_fraction = 0.5);

/// Applies a uniform (Fisher-Yates) permutation jointly to words and their
/// audio. Only word-owned samples are carried over.
Utterance SegPerm(const Utterance& u, DrawSource& draws);

/// Keeps the contiguous word span [start, end] with start ~ U{0..n-1} and
/// end ~ U{start..n-1}, as one slice of audio including inner gaps.
Utterance SegCrop(const Utterance& u, DrawSource& draws);

/// Concatenates audio and words of x then y. Throws kIncompatiblePair on a
/// sample-rate mismatch.
Utterance SegMix(const Utterance& x, const Utterance& y);

enum class Augmenter { kSegCrop, kSegPerm, kSegDrop };

std::string_view AugmenterName(Augmenter a);

struct AugPolicyConfig {
  double apply_prob = 0.5;
  double independent_prob = 0.75;
  /// Weights in the fixed order SegCrop, SegPerm, SegDrop.
  std::array<double, 3> augmenter_probs = {0.1, 0.6, 0.3};
  double max_drop_fraction = 0.5;

  /// Throws kConfiguration on out-of-range probabilities or weights that do
  /// not sum to 1 within 1e-9.
  void Validate() const;
};

/// Maps a uniform draw onto an augmenter by cumulative weight.
Augmenter ChooseAugmenter(double u, const AugPolicyConfig& cfg);

Utterance ApplyAugmenter(Augmenter a, const Utterance& u, DrawSource& draws,
                         const AugPolicyConfig& cfg = {});

enum class PolicyBranch { kNone, kIndependent, kMixed };

struct PolicyOutcome {
  PolicyBranch branch = PolicyBranch::kNone;
  std::vector<Augmenter> augmenters;
  std::vector<Utterance> outputs;
};

/// One round of the SegAug policy over a pair:
///   r1 > apply_prob         -> no outputs
///   r2 <= independent_prob  -> [aug(x), aug(y)], independent choices
///   otherwise               -> [aug(SegMix(x, y))]
/// Draw order is r1, r2, then for each operand the augmenter choice followed
/// by that augmenter's own draws.
PolicyOutcome ApplyPolicy(const Utterance& x, const Utterance& y,
                          const AugPolicyConfig& cfg, DrawSource& draws);

}  // namespace segaug

#endif  // SEGAUG_AUGMENT_HPP_
