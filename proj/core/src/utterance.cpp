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

#include "segaug/utterance.hpp"

#include <string>

#include "segaug/error.hpp"

namespace segaug {

void ValidateSpans(const std::vector<WordSpan>& segments,
                   std::int64_t num_samples) {
  std::int64_t prev_end = 0;
  for (std::size_t k = 0; k < segments.size(); ++k) {
    const Range& r = segments[k].samples;
    if (r.begin >= r.end) {
      throw Error(ErrorCode::kParameter,
                  "segment " + std::to_string(k) + " is empty");
    }
    if (r.begin < prev_end) {
      throw Error(ErrorCode::kParameter,
                  "segment " + std::to_string(k) +
                      " overlaps or precedes the previous one");
    }
    if (r.end > num_samples) {
      throw Error(ErrorCode::kParameter,
                  "segment " + std::to_string(k) + " ends at sample " +
                      std::to_string(r.end) + " past audio length " +
                      std::to_string(num_samples));
    }
    if (segments[k].word.empty()) {
      throw Error(ErrorCode::kParameter,
                  "segment " + std::to_string(k) + " has an empty word");
    }
    prev_end = r.end;
  }
}

Utterance Utterance::FromSource(std::string id, AudioBuffer audio,
                                std::vector<WordSpan> segments) {
  ValidateSpans(segments, audio.size());
  Utterance u;
  u.id = std::move(id);
  u.origins.reserve(segments.size());
  for (std::size_t k = 0; k < segments.size(); ++k) {
    u.origins.push_back(
        {u.id, static_cast<std::int32_t>(k), segments[k].samples});
  }
  if (audio.size() > 0) u.lineage.push_back({u.id, {0, audio.size()}});
  u.segments = std::move(segments);
  u.audio = std::make_shared<const AudioBuffer>(std::move(audio));
  return u;
}

std::vector<std::string> Utterance::Words() const {
  std::vector<std::string> words;
  words.reserve(segments.size());
  for (const auto& s : segments) words.push_back(s.word);
  return words;
}

std::string Utterance::Text() const {
  std::string out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i > 0) out += ' ';
    out += segments[i].word;
  }
  return out;
}

void Utterance::Validate() const {
  if (!audio) throw Error(ErrorCode::kParameter, id + ": no audio");
  ValidateSpans(segments, audio->size());
  if (origins.size() != segments.size()) {
    throw Error(ErrorCode::kParameter, id + ": origins/segments size mismatch");
  }
  for (std::size_t k = 0; k < segments.size(); ++k) {
    if (origins[k].source_samples.size() != segments[k].samples.size()) {
      throw Error(ErrorCode::kParameter,
                  id + ": word " + std::to_string(k) +
                      " length differs from its origin");
    }
  }
  std::int64_t covered = 0;
  for (const auto& p : lineage) covered += p.source_samples.size();
  if (covered != audio->size()) {
    throw Error(ErrorCode::kParameter,
                id + ": lineage covers " + std::to_string(covered) +
                    " samples, audio has " + std::to_string(audio->size()));
  }
}

}  // namespace segaug
