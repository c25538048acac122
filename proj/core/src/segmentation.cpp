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

#include "segaug/segmentation.hpp"

#include <algorithm>
#include <string>

#include "segaug/error.hpp"

namespace segaug {

void FrameGeometry::Validate() const {
  if (frame_shift_ms <= 0 || subsample_factor <= 0 || sample_rate_hz <= 0) {
    throw Error(ErrorCode::kConfiguration,
                "frame geometry fields must be positive");
  }
  if ((sample_rate_hz * frame_shift_ms * subsample_factor) % 1000 != 0) {
    throw Error(ErrorCode::kConfiguration,
                "samples per encoder frame is not an integer");
  }
}

std::int64_t FrameGeometry::SamplesPerFrame() const {
  Validate();
  return sample_rate_hz * frame_shift_ms * subsample_factor / 1000;
}

std::vector<WordSegment> SegmentsFromPath(const AlignmentPath& path,
                                          const BlankAugmentedTarget& target,
                                          const Transcript& transcript) {
  if (target.num_labels() != transcript.char_ids.size() ||
      transcript.char_owner.size() != transcript.char_ids.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "target does not match transcript");
  }
  std::vector<WordSegment> segments(transcript.num_words());
  std::vector<bool> seen(transcript.num_words(), false);
  for (std::size_t i = 0; i < segments.size(); ++i) {
    segments[i].word = transcript.words[i];
  }
  for (std::size_t t = 0; t < path.states.size(); ++t) {
    const auto state = static_cast<std::size_t>(path.states[t]);
    if (state >= target.states.size()) {
      throw Error(ErrorCode::kDimensionMismatch, "path state outside target");
    }
    if (target.IsBlankState(state)) continue;
    const std::int32_t owner =
        transcript.char_owner[BlankAugmentedTarget::CharIndex(state)];
    if (owner < 0) continue;  // delimiter
    auto& seg = segments[static_cast<std::size_t>(owner)];
    const auto frame = static_cast<std::int64_t>(t);
    if (!seen[static_cast<std::size_t>(owner)]) {
      seg.frames.begin = frame;
      seen[static_cast<std::size_t>(owner)] = true;
    }
    seg.frames.end = frame + 1;
  }
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (!seen[i]) {
      throw Error(ErrorCode::kMissingWord,
                  "word " + std::to_string(i) + " ('" + segments[i].word +
                      "') has no frames in the alignment");
    }
  }
  return segments;
}

std::vector<WordSegment> RefineBoundaries(std::vector<WordSegment> segments,
                                          std::int64_t num_frames,
                                          std::int64_t pad_frames) {
  if (pad_frames < 0) {
    throw Error(ErrorCode::kParameter, "pad_frames must be non-negative");
  }
  std::int64_t prev_end = 0;
  for (const auto& seg : segments) {
    if (seg.frames.begin < prev_end || seg.frames.begin >= seg.frames.end ||
        seg.frames.end > num_frames) {
      throw Error(ErrorCode::kParameter,
                  "raw segments must be non-empty, ordered, disjoint and "
                  "inside the grid");
    }
    prev_end = seg.frames.end;
  }
  if (segments.empty()) return segments;

  for (std::size_t k = 0; k + 1 < segments.size(); ++k) {
    const std::int64_t mid =
        (segments[k].frames.end + segments[k + 1].frames.begin) / 2;
    segments[k].frames.end = mid;
    segments[k + 1].frames.begin = mid;
  }
  auto& first = segments.front().frames;
  first.begin -= std::min(pad_frames, first.begin);
  auto& last = segments.back().frames;
  last.end += std::min(pad_frames, num_frames - last.end);
  return segments;
}

Range FramesToSamples(Range frames, const FrameGeometry& geometry) {
  const std::int64_t spf = geometry.SamplesPerFrame();
  return {frames.begin * spf, frames.end * spf};
}

}  // namespace segaug
