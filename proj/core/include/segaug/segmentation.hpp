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

#ifndef SEGAUG_SEGMENTATION_HPP_
#define SEGAUG_SEGMENTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "segaug/ctc_align.hpp"
#include "segaug/vocab.hpp"

namespace segaug {

/// Half-open range [begin, end).
struct Range {
  std::int64_t begin = 0;
  std::int64_t end = 0;

  std::int64_t size() const { return end - begin; }
  bool operator==(const Range&) const = default;
};

struct WordSegment {
  std::string word;
  Range frames;
  Range samples;
};

/// Front-end timing. One encoder frame covers
/// sample_rate_hz * frame_shift_ms * subsample_factor / 1000 samples.
struct FrameGeometry {
  std::int64_t frame_shift_ms = 10;
  std::int64_t subsample_factor = 4;
  std::int64_t sample_rate_hz = 16000;

  /// Throws kConfiguration unless all fields are positive and the
  /// samples-per-frame product is an integer.
  void Validate() const;
  std::int64_t SamplesPerFrame() const;
};

inline constexpr std::int64_t kDefaultPadFrames = 5;

/// Groups path frames by owning word. Blank and delimiter frames are left
/// out, so they end up in the gaps between words. Sample ranges are unset.
///
/// Throws kMissingWord if a word emits no frame (possible only with an
/// unconstrained backtrack start).
std::vector<WordSegment> SegmentsFromPath(const AlignmentPath& path,
                                          const BlankAugmentedTarget& target,
                                          const Transcript& transcript);

/// Moves each inter-word boundary to floor((end_k + begin_{k+1}) / 2), the
/// right word owning the midpoint frame. The first word start and last word
/// end are pushed outwards by at most `pad_frames`, staying in [0, T).
std::vector<WordSegment> RefineBoundaries(std::vector<WordSegment> segments,
                                          std::int64_t num_frames,
                                          std::int64_t pad_frames);

Range FramesToSamples(Range frames, const FrameGeometry& geometry);

}  // namespace segaug

#endif  // SEGAUG_SEGMENTATION_HPP_
