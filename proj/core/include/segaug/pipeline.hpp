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

#ifndef SEGAUG_PIPELINE_HPP_
#define SEGAUG_PIPELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "segaug/augment.hpp"
#include "segaug/manifest.hpp"
#include "segaug/posterior_grid.hpp"
#include "segaug/scoring.hpp"
#include "segaug/segmentation.hpp"
#include "segaug/vocab.hpp"

namespace segaug {

struct RunConfig {
  std::uint64_t master_seed = 0;
  FrameGeometry geometry;
  AugPolicyConfig policy;
  std::int64_t pad_frames = kDefaultPadFrames;
  /// Size of the SegMix partner pool.
  int shuffle_buffer = 64;
  bool emit_originals = true;
  bool paper_literal_backtrack = false;

  void Validate() const;
};

/// Aligns one utterance and returns refined segments with frame and sample
/// ranges; sample ends are clamped to `num_samples`.
std::vector<WordSegment> AlignUtterance(const LogPosteriorGrid& grid,
                                        const Transcript& transcript,
                                        const Vocab& vocab,
                                        std::int64_t num_samples,
                                        const RunConfig& config);

// Exit codes shared by the commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFatal = 1;
inline constexpr int kExitPartial = 2;

struct AlignRequest {
  std::filesystem::path manifest;
  std::filesystem::path posteriors_dir;
  std::filesystem::path vocab;
  std::filesystem::path out;
};

struct AlignSummary {
  std::size_t aligned = 0;
  std::size_t rejected = 0;
  std::filesystem::path rejects_path;

  int exit_code() const { return rejected > 0 ? kExitPartial : kExitOk; }
};

/// Reads the manifest, aligns every entry and writes `out` plus
/// `<out>.rejects.jsonl` ({"id", "error", "message"} per line). The
/// posterior file of an entry is its posterior_path, or else
/// `<posteriors_dir>/<id>.ctcp`. Per-entry failures go to the rejects file;
/// manifest and vocab errors throw.
AlignSummary CmdAlign(const AlignRequest& request, const RunConfig& config);

/// Loads a segmented manifest entry as an augmentable utterance. Throws
/// kParameter naming the entry when segments are missing or invalid.
Utterance LoadUtterance(const ManifestEntry& entry,
                        const std::filesystem::path& manifest_path);

/// Outputs produced for one corpus entry.
struct AugmentBatch {
  std::size_t index = 0;
  std::string partner_id;
  PolicyOutcome outcome;
};

/// Seeded SegAug over a corpus in order. Entry i is paired with a partner
/// drawn uniformly from the next shuffle_buffer - 1 entries (cyclically);
/// a corpus of one pairs the entry with itself. Partner choice and policy
/// share a stream keyed by (master_seed, entry id), so output depends only
/// on corpus order and seed. Output ids are "<entry id>-aug<k>".
class AugmentStream {
 public:
  AugmentStream(std::vector<Utterance> corpus, RunConfig config);

  std::optional<AugmentBatch> Next();
  const std::vector<Utterance>& corpus() const { return corpus_; }

 private:
  std::vector<Utterance> corpus_;
  RunConfig config_;
  std::size_t next_ = 0;
};

struct AugmentRequest {
  std::filesystem::path manifest;
  std::filesystem::path out_dir;
};

struct AugmentSummary {
  std::size_t inputs = 0;
  std::size_t augmented = 0;
  std::size_t originals = 0;
};

/// Writes `<out_dir>/manifest.jsonl` and `<out_dir>/audio/<id>.wav` for
/// every emitted utterance. Originals (when enabled) keep every manifest
/// field except audio_path, which points at the copied WAV.
AugmentSummary CmdAugment(const AugmentRequest& request,
                          const RunConfig& config);

struct ScoreRequest {
  std::filesystem::path ref;
  std::filesystem::path hyp;
  std::optional<std::filesystem::path> baseline;
  bool bootstrap = false;
  BootstrapOptions bootstrap_options;
  std::optional<std::filesystem::path> report_json;
};

struct ScoreReport {
  std::size_t utterances = 0;
  ErrorCounts totals;
  ErrorRates rates;
  std::optional<BootstrapResult> wer_ci;
  std::optional<BootstrapResult> del_ci;
  std::optional<ErrorCounts> baseline_totals;
  std::optional<ErrorRates> baseline_rates;
  std::optional<double> rwerr;
  std::optional<BootstrapResult> rwerr_ci;

  std::string ToText() const;
  std::string ToJson() const;
};

/// Throws kParameter listing ids missing on either side.
ScoreReport CmdScore(const ScoreRequest& request);

/// Per-utterance counts for matching ids (ordered by id).
std::vector<UtteranceStats> ScoreEntries(
    const std::vector<ManifestEntry>& ref,
    const std::vector<ManifestEntry>& hyp);

}  // namespace segaug

#endif  // SEGAUG_PIPELINE_HPP_
