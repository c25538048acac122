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
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "segaug/error.hpp"
#include "segaug/pipeline.hpp"
#include "segaug/posterior_io.hpp"
#include "segaug/wav_io.hpp"

namespace segaug {

namespace fs = std::filesystem;

namespace {

using Json = nlohmann::ordered_json;

// Re-expresses a manifest-relative path so it resolves from `out_dir`.
std::string Rebase(const fs::path& manifest, const std::string& entry_path,
                   const fs::path& out_dir) {
  fs::path p(entry_path);
  if (p.is_absolute()) return entry_path;
  const fs::path abs = fs::absolute(ResolvePath(manifest, entry_path)).lexically_normal();
  return abs.lexically_relative(fs::absolute(out_dir).lexically_normal()).generic_string();
}

std::string FileStem(const std::string& id) {
  std::string s = id;
  std::replace(s.begin(), s.end(), '/', '_');
  std::replace(s.begin(), s.end(), '\\', '_');
  return s;
}

Json CiJson(const BootstrapResult& r) {
  return Json{{"mean", r.mean},
              {"lower", r.lower},
              {"upper", r.upper},
              {"replicates", r.replicates},
              {"alpha", r.alpha},
              {"fraction_below_zero", r.fraction_below_zero},
              {"text", FormatInterval(r)}};
}

Json RatesJson(const ErrorRates& r) {
  return Json{{"wer", r.wer}, {"sub", r.sub}, {"del", r.del}, {"ins", r.ins}};
}

Json CountsJson(const ErrorCounts& c) {
  return Json{{"hits", c.hits},
              {"substitutions", c.substitutions},
              {"deletions", c.deletions},
              {"insertions", c.insertions},
              {"ref_len", c.ref_len}};
}

}  // namespace

std::vector<WordSegment> AlignUtterance(const LogPosteriorGrid& grid,
                                        const Transcript& transcript,
                                        const Vocab& vocab,
                                        std::int64_t num_samples,
                                        const RunConfig& config) {
  if (grid.num_symbols() != vocab.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "grid has " + std::to_string(grid.num_symbols()) +
                    " symbols, vocab has " + std::to_string(vocab.size()));
  }
  const BlankAugmentedTarget target = ExpandWithBlanks(transcript.char_ids, vocab);
  AlignOptions options;
  if (config.paper_literal_backtrack) {
    options.backtrack_start = BacktrackStart::kUnconstrained;
  }
  const AlignmentPath path = AlignPath(grid, target, options);
  auto segments = RefineBoundaries(SegmentsFromPath(path, target, transcript),
                                   static_cast<std::int64_t>(grid.num_frames()),
                                   config.pad_frames);
  for (auto& seg : segments) {
    seg.samples = FramesToSamples(seg.frames, config.geometry);
    seg.samples.end = std::min(seg.samples.end, num_samples);
    if (seg.samples.begin >= seg.samples.end) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "word '" + seg.word + "' starts at sample " +
                      std::to_string(seg.samples.begin) +
                      ", beyond the audio (" + std::to_string(num_samples) +
                      " samples)");
    }
  }
  return segments;
}

AlignSummary CmdAlign(const AlignRequest& request, const RunConfig& config) {
  config.Validate();
  const Vocab vocab = Vocab::Load(request.vocab);
  const auto entries = ReadManifest(request.manifest);
  const fs::path out_dir = request.out.parent_path().empty() ? fs::path(".")
                                                             : request.out.parent_path();

  AlignSummary summary;
  summary.rejects_path = request.out;
  summary.rejects_path += ".rejects.jsonl";
  std::vector<ManifestEntry> aligned;
  std::string rejects;

  for (const auto& entry : entries) {
    try {
      const fs::path posterior =
          entry.posterior_path ? ResolvePath(request.manifest, *entry.posterior_path)
                               : request.posteriors_dir / (entry.id + ".ctcp");
      if (!fs::exists(posterior)) {
        throw Error(ErrorCode::kIo, "missing posterior file " + posterior.string());
      }
      const LogPosteriorGrid grid = ReadPosteriors(posterior);
      const AudioBuffer audio = ReadWav(ResolvePath(request.manifest, entry.audio_path));
      const Transcript transcript = Transcript::FromText(entry.text, vocab);
      const auto segments = AlignUtterance(grid, transcript, vocab, audio.size(), config);

      ManifestEntry out = entry;
      out.audio_path = Rebase(request.manifest, entry.audio_path, out_dir);
      if (entry.posterior_path) {
        out.posterior_path = Rebase(request.manifest, *entry.posterior_path, out_dir);
      }
      std::vector<ManifestSegment> segs;
      for (const auto& s : segments) segs.push_back({s.word, s.samples, s.frames});
      out.segments = std::move(segs);
      aligned.push_back(std::move(out));
    } catch (const Error& e) {
      rejects += Json{{"id", entry.id},
                      {"error", std::string(ErrorCodeName(e.code()))},
                      {"message", e.what()}}
                     .dump();
      rejects += '\n';
      ++summary.rejected;
    }
  }
  summary.aligned = aligned.size();
  WriteManifest(request.out, aligned);
  WriteFileBytes(summary.rejects_path, rejects);
  return summary;
}

Utterance LoadUtterance(const ManifestEntry& entry, const fs::path& manifest_path) {
  if (!entry.segments) {
    throw Error(ErrorCode::kParameter, "entry '" + entry.id + "' has no segments");
  }
  std::vector<WordSpan> spans;
  for (const auto& s : *entry.segments) spans.push_back({s.word, s.samples});
  std::vector<std::string> seg_words;
  for (const auto& s : spans) seg_words.push_back(s.word);
  if (seg_words != SplitWords(entry.text)) {
    throw Error(ErrorCode::kParameter,
                "entry '" + entry.id + "': segment words do not match the text");
  }
  try {
    return Utterance::FromSource(entry.id,
                                 ReadWav(ResolvePath(manifest_path, entry.audio_path)),
                                 std::move(spans));
  } catch (const Error& e) {
    throw Error(e.code(), "entry '" + entry.id + "': " + e.what());
  }
}

AugmentSummary CmdAugment(const AugmentRequest& request, const RunConfig& config) {
  config.Validate();
  const auto entries = ReadManifest(request.manifest);
  std::vector<Utterance> corpus;
  corpus.reserve(entries.size());
  for (const auto& e : entries) corpus.push_back(LoadUtterance(e, request.manifest));

  const fs::path audio_dir = request.out_dir / "audio";
  fs::create_directories(audio_dir);

  AugmentSummary summary;
  summary.inputs = entries.size();
  std::vector<ManifestEntry> out;
  std::set<std::string> written;

  auto write_audio = [&](const std::string& id, const AudioBuffer& audio) {
    const std::string rel = "audio/" + FileStem(id) + ".wav";
    if (!written.insert(rel).second) {
      throw Error(ErrorCode::kParameter, "output id collision on '" + id + "'");
    }
    WriteWav(audio, request.out_dir / rel);
    return rel;
  };

  AugmentStream stream(std::move(corpus), config);
  while (auto batch = stream.Next()) {
    if (config.emit_originals) {
      ManifestEntry original = entries[batch->index];
      original.audio_path =
          write_audio(original.id, *stream.corpus()[batch->index].audio);
      out.push_back(std::move(original));
      ++summary.originals;
    }
    for (const Utterance& u : batch->outcome.outputs) {
      ManifestEntry e;
      e.id = u.id;
      e.audio_path = write_audio(u.id, *u.audio);
      e.text = u.Text();
      std::vector<ManifestSegment> segs;
      for (const auto& s : u.segments) segs.push_back({s.word, s.samples, std::nullopt});
      e.segments = std::move(segs);
      e.provenance = Provenance{u.origins, u.lineage};
      out.push_back(std::move(e));
      ++summary.augmented;
    }
  }
  WriteManifest(request.out_dir / "manifest.jsonl", out);
  return summary;
}

std::vector<UtteranceStats> ScoreEntries(const std::vector<ManifestEntry>& ref,
                                         const std::vector<ManifestEntry>& hyp) {
  std::map<std::string, const ManifestEntry*> hyp_by_id;
  for (const auto& h : hyp) hyp_by_id.emplace(h.id, &h);
  std::set<std::string> ref_ids;
  std::vector<std::string> missing;
  std::vector<UtteranceStats> stats;
  for (const auto& r : ref) {
    ref_ids.insert(r.id);
    auto it = hyp_by_id.find(r.id);
    if (it == hyp_by_id.end()) {
      missing.push_back("hyp lacks '" + r.id + "'");
      continue;
    }
    const auto ref_words = SplitWords(r.text);
    const auto hyp_words = SplitWords(it->second->text);
    stats.push_back({r.id, EditAlign(ref_words, hyp_words)});
  }
  for (const auto& h : hyp) {
    if (!ref_ids.contains(h.id)) missing.push_back("ref lacks '" + h.id + "'");
  }
  if (!missing.empty()) {
    std::string msg = "reference and hypothesis ids differ:";
    for (const auto& m : missing) msg += "\n  " + m;
    throw Error(ErrorCode::kParameter, msg);
  }
  std::sort(stats.begin(), stats.end(),
            [](const UtteranceStats& a, const UtteranceStats& b) { return a.id < b.id; });
  return stats;
}

ScoreReport CmdScore(const ScoreRequest& request) {
  const auto ref = ReadManifest(request.ref);
  const auto stats = ScoreEntries(ref, ReadManifest(request.hyp));

  ScoreReport report;
  report.utterances = stats.size();
  for (const auto& s : stats) report.totals += s.counts;
  report.rates = Rates(report.totals);

  if (request.bootstrap) {
    report.wer_ci = BootstrapCi(std::span<const UtteranceStats>(stats), WerPercent,
                                request.bootstrap_options);
    report.del_ci = BootstrapCi(std::span<const UtteranceStats>(stats),
                                [](const ErrorCounts& c) { return Rates(c).del; },
                                request.bootstrap_options);
  }

  if (request.baseline) {
    const auto base = ScoreEntries(ref, ReadManifest(*request.baseline));
    ErrorCounts base_totals;
    for (const auto& s : base) base_totals += s.counts;
    report.baseline_totals = base_totals;
    report.baseline_rates = Rates(base_totals);
    report.rwerr = RelativeReduction(report.baseline_rates->wer, report.rates.wer);
    if (request.bootstrap) {
      std::vector<PairedStats> paired;
      paired.reserve(stats.size());
      for (std::size_t i = 0; i < stats.size(); ++i) {
        paired.push_back({stats[i].id, base[i].counts, stats[i].counts});
      }
      report.rwerr_ci = BootstrapCi(
          std::span<const PairedStats>(paired),
          [](const ErrorCounts& b, const ErrorCounts& s) {
            return RelativeReduction(WerPercent(b), WerPercent(s));
          },
          request.bootstrap_options);
    }
  }

  if (request.report_json) WriteFileBytes(*request.report_json, report.ToJson() + "\n");
  return report;
}

std::string ScoreReport::ToText() const {
  std::ostringstream out;
  out << "utterances " << utterances << "  ref words " << totals.ref_len << "\n";
  out << "WER " << FormatFixed(rates.wer, 2) << "  SUB " << FormatFixed(rates.sub, 2)
      << "  DEL " << FormatFixed(rates.del, 2) << "  INS " << FormatFixed(rates.ins, 2)
      << "\n";
  auto ci_line = [&](const char* label, const BootstrapResult& r) {
    out << label << " " << FormatInterval(r) << "  (B=" << r.replicates
        << ", alpha=" << r.alpha << ")\n";
  };
  if (wer_ci) ci_line("WER CI", *wer_ci);
  if (del_ci) ci_line("DEL CI", *del_ci);
  if (baseline_rates) {
    out << "baseline WER " << FormatFixed(baseline_rates->wer, 2) << "  SUB "
        << FormatFixed(baseline_rates->sub, 2) << "  DEL "
        << FormatFixed(baseline_rates->del, 2) << "  INS "
        << FormatFixed(baseline_rates->ins, 2) << "\n";
  }
  if (rwerr) out << "rWERR " << FormatFixed(*rwerr, 2) << "%\n";
  if (rwerr_ci) {
    ci_line("rWERR CI", *rwerr_ci);
    out << "rWERR replicates below zero " << FormatFixed(100.0 * rwerr_ci->fraction_below_zero, 2)
        << "%\n";
  }
  return out.str();
}

std::string ScoreReport::ToJson() const {
  Json j;
  j["utterances"] = utterances;
  j["counts"] = CountsJson(totals);
  j["rates"] = RatesJson(rates);
  if (wer_ci) j["wer_ci"] = CiJson(*wer_ci);
  if (del_ci) j["del_ci"] = CiJson(*del_ci);
  if (baseline_totals) j["baseline_counts"] = CountsJson(*baseline_totals);
  if (baseline_rates) j["baseline_rates"] = RatesJson(*baseline_rates);
  if (rwerr) j["rwerr"] = *rwerr;
  if (rwerr_ci) j["rwerr_ci"] = CiJson(*rwerr_ci);
  return j.dump(2);
}

}  // namespace segaug
