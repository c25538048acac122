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

// segaug: CTC word alignment, segment-level augmentation and WER scoring.
//
//   segaug align   --manifest F --posteriors DIR --vocab V --out F2
//   segaug augment --manifest F --out-dir D --seed S
//   segaug score   --ref F --hyp F [--baseline F] [--bootstrap]
//
// Every flag can also be set through a SEGAUG_* environment variable.
// Exit codes: 0 success, 1 fatal input error, 2 partial (align rejects).

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "segaug/error.hpp"
#include "segaug/pipeline.hpp"

namespace {

using segaug::RunConfig;

struct AlignArgs {
  segaug::AlignRequest request;
};

struct AugmentArgs {
  segaug::AugmentRequest request;
  std::vector<double> augmenter_probs = {0.1, 0.6, 0.3};
  bool no_emit_originals = false;
};

struct ScoreArgs {
  segaug::ScoreRequest request;
  std::string baseline;
  std::string report;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CTC-aligned word segmentation, SegAug augmentation and WER scoring"};
  app.require_subcommand(1);

  RunConfig config;
  AlignArgs align;
  AugmentArgs augment;
  ScoreArgs score;

  auto* align_cmd = app.add_subcommand("align", "Align manifest entries to CTC posteriors");
  align_cmd->add_option("--manifest", align.request.manifest, "Input JSON-lines manifest")
      ->required()->envname("SEGAUG_MANIFEST");
  align_cmd->add_option("--posteriors", align.request.posteriors_dir,
                        "Directory holding <id>.ctcp posterior files")
      ->required()->envname("SEGAUG_POSTERIORS");
  align_cmd->add_option("--vocab", align.request.vocab, "Vocabulary file, one symbol per line")
      ->required()->envname("SEGAUG_VOCAB");
  align_cmd->add_option("--out", align.request.out, "Output manifest with segments")
      ->required()->envname("SEGAUG_OUT");
  align_cmd->add_option("--pad-frames", config.pad_frames,
                        "Encoder frames of padding at utterance edges")
      ->envname("SEGAUG_PAD_FRAMES")->capture_default_str();
  align_cmd->add_flag("--paper-literal-backtrack", config.paper_literal_backtrack,
                      "Start the backtrack from the unconstrained best final state")
      ->envname("SEGAUG_PAPER_LITERAL_BACKTRACK");
  align_cmd->add_option("--frame-shift-ms", config.geometry.frame_shift_ms)
      ->envname("SEGAUG_FRAME_SHIFT_MS")->capture_default_str();
  align_cmd->add_option("--subsample", config.geometry.subsample_factor)
      ->envname("SEGAUG_SUBSAMPLE")->capture_default_str();
  align_cmd->add_option("--sample-rate", config.geometry.sample_rate_hz)
      ->envname("SEGAUG_SAMPLE_RATE")->capture_default_str();

  auto* aug_cmd = app.add_subcommand("augment", "Apply the SegAug policy to a segmented manifest");
  aug_cmd->add_option("--manifest", augment.request.manifest, "Segmented input manifest")
      ->required()->envname("SEGAUG_MANIFEST");
  aug_cmd->add_option("--out-dir", augment.request.out_dir, "Output directory")
      ->required()->envname("SEGAUG_OUT_DIR");
  aug_cmd->add_option("--seed", config.master_seed, "Master seed")
      ->required()->envname("SEGAUG_SEED");
  aug_cmd->add_option("--apply-prob", config.policy.apply_prob)
      ->envname("SEGAUG_APPLY_PROB")->capture_default_str();
  aug_cmd->add_option("--independent-prob", config.policy.independent_prob)
      ->envname("SEGAUG_INDEPENDENT_PROB")->capture_default_str();
  aug_cmd->add_option("--augmenter-probs", augment.augmenter_probs,
                      "SegCrop,SegPerm,SegDrop weights")
      ->delimiter(',')->expected(3)->envname("SEGAUG_AUGMENTER_PROBS");
  aug_cmd->add_option("--shuffle-buffer", config.shuffle_buffer, "SegMix partner pool size")
      ->envname("SEGAUG_SHUFFLE_BUFFER")->capture_default_str();
  aug_cmd->add_flag("--no-emit-originals", augment.no_emit_originals,
                    "Only write augmented utterances")
      ->envname("SEGAUG_NO_EMIT_ORIGINALS");

  auto* score_cmd = app.add_subcommand("score", "WER with SUB/DEL/INS and bootstrap CIs");
  score_cmd->add_option("--ref", score.request.ref, "Reference manifest")
      ->required()->envname("SEGAUG_REF");
  score_cmd->add_option("--hyp", score.request.hyp, "Hypothesis manifest")
      ->required()->envname("SEGAUG_HYP");
  score_cmd->add_option("--baseline", score.baseline,
                        "Baseline hypothesis manifest for paired rWERR")
      ->envname("SEGAUG_BASELINE");
  score_cmd->add_flag("--bootstrap", score.request.bootstrap, "Report bootstrap CIs")
      ->envname("SEGAUG_BOOTSTRAP");
  score_cmd->add_option("--B", score.request.bootstrap_options.replicates,
                        "Bootstrap replicates")
      ->envname("SEGAUG_B")->capture_default_str();
  score_cmd->add_option("--alpha", score.request.bootstrap_options.alpha)
      ->envname("SEGAUG_ALPHA")->capture_default_str();
  score_cmd->add_option("--seed", score.request.bootstrap_options.seed)
      ->envname("SEGAUG_SEED")->capture_default_str();
  score_cmd->add_option("--report", score.report, "Also write the report as JSON")
      ->envname("SEGAUG_REPORT");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*align_cmd) {
      const auto summary = segaug::CmdAlign(align.request, config);
      std::cerr << "aligned " << summary.aligned << ", rejected " << summary.rejected;
      if (summary.rejected > 0) std::cerr << " (see " << summary.rejects_path.string() << ")";
      std::cerr << "\n";
      return summary.exit_code();
    }
    if (*aug_cmd) {
      std::copy(augment.augmenter_probs.begin(), augment.augmenter_probs.end(),
                config.policy.augmenter_probs.begin());
      config.emit_originals = !augment.no_emit_originals;
      const auto summary = segaug::CmdAugment(augment.request, config);
      std::cerr << "inputs " << summary.inputs << ", originals " << summary.originals
                << ", augmented " << summary.augmented << "\n";
      return segaug::kExitOk;
    }
    if (*score_cmd) {
      if (!score.baseline.empty()) score.request.baseline = score.baseline;
      if (!score.report.empty()) score.request.report_json = score.report;
      std::cout << segaug::CmdScore(score.request).ToText();
      return segaug::kExitOk;
    }
  } catch (const segaug::Error& e) {
    std::cerr << "error (" << segaug::ErrorCodeName(e.code()) << "): " << e.what() << "\n";
    return segaug::kExitFatal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return segaug::kExitFatal;
  }
  return segaug::kExitFatal;
}
