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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "segaug/augment.hpp"
#include "segaug/error.hpp"

namespace segaug {

namespace {

// Builds an output utterance from slices of source utterances, carrying
// word origins and audio lineage through every cut.
class Assembler {
 public:
  explicit Assembler(std::int32_t sample_rate) { audio_.sample_rate_hz = sample_rate; }

  // Appends src audio [range) and the listed words, which must lie inside it.
  void AppendSlice(const Utterance& src, Range range,
                   const std::vector<std::size_t>& words) {
    const std::int64_t offset = audio_.size() - range.begin;
    const auto& samples = src.audio->samples;
    audio_.samples.insert(audio_.samples.end(), samples.begin() + range.begin,
                          samples.begin() + range.end);
    AppendLineage(src, range);
    for (std::size_t k : words) {
      const Range r = src.segments[k].samples;
      segments_.push_back({src.segments[k].word, {r.begin + offset, r.end + offset}});
      origins_.push_back(src.origins[k]);
    }
  }

  void AppendWord(const Utterance& src, std::size_t k) {
    AppendSlice(src, src.segments[k].samples, {k});
  }

  Utterance Finish(std::string id) {
    Utterance u;
    u.id = std::move(id);
    u.audio = std::make_shared<const AudioBuffer>(std::move(audio_));
    u.segments = std::move(segments_);
    u.origins = std::move(origins_);
    u.lineage = std::move(lineage_);
    return u;
  }

 private:
  void AppendLineage(const Utterance& src, Range range) {
    std::int64_t pos = 0;
    for (const auto& piece : src.lineage) {
      const std::int64_t len = piece.source_samples.size();
      const std::int64_t lo = std::max(range.begin, pos);
      const std::int64_t hi = std::min(range.end, pos + len);
      if (lo < hi) {
        const std::int64_t base = piece.source_samples.begin - pos;
        AudioPiece cut{piece.source_id, {lo + base, hi + base}};
        if (!lineage_.empty() && lineage_.back().source_id == cut.source_id &&
            lineage_.back().source_samples.end == cut.source_samples.begin) {
          lineage_.back().source_samples.end = cut.source_samples.end;
        } else {
          lineage_.push_back(std::move(cut));
        }
      }
      pos += len;
      if (pos >= range.end) break;
    }
  }

  AudioBuffer audio_;
  std::vector<WordSpan> segments_;
  std::vector<WordOrigin> origins_;
  std::vector<AudioPiece> lineage_;
};

std::vector<std::size_t> AllWords(const Utterance& u) {
  std::vector<std::size_t> all(u.num_words());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return all;
}

Utterance Copy(const Utterance& u, std::string id) {
  Utterance out = u;
  out.id = std::move(id);
  return out;
}

}  // namespace

Utterance SegDrop(const Utterance& u, DrawSource& draws, double max_fraction) {
  const std::size_t n = u.num_words();
  const auto max_drop = static_cast<std::int64_t>(
      std::floor(static_cast<double>(n) * max_fraction));
  if (max_drop <= 0) return Copy(u, u.id + ".sd");

  const std::int64_t k = draws.UniformInt(1, max_drop);
  // Partial Fisher-Yates: the first k slots end up holding the dropped words.
  std::vector<std::size_t> idx = AllWords(u);
  for (std::int64_t i = 0; i < k; ++i) {
    const auto j = static_cast<std::size_t>(
        draws.UniformInt(i, static_cast<std::int64_t>(n) - 1));
    std::swap(idx[static_cast<std::size_t>(i)], idx[j]);
  }
  std::vector<bool> dropped(n, false);
  for (std::int64_t i = 0; i < k; ++i) dropped[idx[static_cast<std::size_t>(i)]] = true;

  Assembler out(u.audio->sample_rate_hz);
  for (std::size_t w = 0; w < n; ++w) {
    if (!dropped[w]) out.AppendWord(u, w);
  }
  return out.Finish(u.id + ".sd");
}

Utterance SegPerm(const Utterance& u, DrawSource& draws) {
  const std::size_t n = u.num_words();
  if (n == 0) return Copy(u, u.id + ".sp");
  std::vector<std::size_t> order = AllWords(u);
  for (std::size_t i = n - 1; i >= 1; --i) {
    const auto j = static_cast<std::size_t>(
        draws.UniformInt(0, static_cast<std::int64_t>(i)));
    std::swap(order[i], order[j]);
  }
  Assembler out(u.audio->sample_rate_hz);
  for (std::size_t w : order) out.AppendWord(u, w);
  return out.Finish(u.id + ".sp");
}

Utterance SegCrop(const Utterance& u, DrawSource& draws) {
  const auto n = static_cast<std::int64_t>(u.num_words());
  if (n == 0) return Copy(u, u.id + ".sc");
  const std::int64_t start = draws.UniformInt(0, n - 1);
  const std::int64_t end = draws.UniformInt(start, n - 1);
  std::vector<std::size_t> kept;
  for (std::int64_t w = start; w <= end; ++w) kept.push_back(static_cast<std::size_t>(w));
  const Range span{u.segments[static_cast<std::size_t>(start)].samples.begin,
                   u.segments[static_cast<std::size_t>(end)].samples.end};
  Assembler out(u.audio->sample_rate_hz);
  out.AppendSlice(u, span, kept);
  return out.Finish(u.id + ".sc");
}

Utterance SegMix(const Utterance& x, const Utterance& y) {
  if (x.audio->sample_rate_hz != y.audio->sample_rate_hz) {
    throw Error(ErrorCode::kIncompatiblePair,
                "cannot mix " + x.id + " (" +
                    std::to_string(x.audio->sample_rate_hz) + " Hz) with " +
                    y.id + " (" + std::to_string(y.audio->sample_rate_hz) +
                    " Hz)");
  }
  Assembler out(x.audio->sample_rate_hz);
  out.AppendSlice(x, {0, x.num_samples()}, AllWords(x));
  out.AppendSlice(y, {0, y.num_samples()}, AllWords(y));
  return out.Finish(x.id + "+" + y.id);
}

}  // namespace segaug
