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

#ifndef SEGAUG_UTTERANCE_HPP_
#define SEGAUG_UTTERANCE_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "segaug/segmentation.hpp"
#include "segaug/wav_io.hpp"

namespace segaug {

/// A word and the audio samples it owns.
struct WordSpan {
  std::string word;
  Range samples;

  bool operator==(const WordSpan&) const = default;
};

/// Where an output word came from: its source utterance, its index in the
/// source's segment list, and the samples it covered there.
struct WordOrigin {
  std::string source_id;
  std::int32_t segment_index = 0;
  Range source_samples;

  bool operator==(const WordOrigin&) const = default;
};

/// A run of source samples. Concatenating an utterance's pieces in order
/// reproduces its audio exactly.
struct AudioPiece {
  std::string source_id;
  Range source_samples;

  bool operator==(const AudioPiece&) const = default;
};

/// Audio-text pair with word segmentation. `origins` runs parallel to
/// `segments`; `lineage` describes the audio.
struct Utterance {
  std::string id;
  std::shared_ptr<const AudioBuffer> audio;
  std::vector<WordSpan> segments;
  std::vector<WordOrigin> origins;
  std::vector<AudioPiece> lineage;

  /// Wraps a corpus utterance, making it its own provenance root.
  /// Throws kParameter if the segments are not ordered, disjoint and
  /// inside the audio.
  static Utterance FromSource(std::string id, AudioBuffer audio,
                              std::vector<WordSpan> segments);

  std::size_t num_words() const { return segments.size(); }
  std::int64_t num_samples() const { return audio ? audio->size() : 0; }
  std::vector<std::string> Words() const;
  std::string Text() const;

  /// Checks segment ordering and bounds plus provenance bookkeeping.
  void Validate() const;
};

/// Checks that `segments` are non-empty ranges, ordered, disjoint and lie
/// within [0, num_samples). Throws kParameter with a description otherwise.
void ValidateSpans(const std::vector<WordSpan>& segments,
                   std::int64_t num_samples);

}  // namespace segaug

#endif  // SEGAUG_UTTERANCE_HPP_
