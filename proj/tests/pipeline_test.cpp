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
#include <random>

#include "doctest.h"
#include "segaug/error.hpp"
#include "segaug/manifest.hpp"
#include "segaug/pipeline.hpp"
#include "support/synth_corpus.hpp"
#include "support/test_support.hpp"

namespace segaug {
namespace {

namespace fs = std::filesystem;

struct AlignedCorpus {
  fs::path dir;
  std::vector<testing::SynthUtterance> utterances;
  AlignSummary summary;
};

AlignedCorpus BuildAndAlign(const std::string& name, int count, std::uint64_t seed) {
  AlignedCorpus c;
  c.dir = testing::TempDir(name);
  std::mt19937_64 rng(seed);
  std::vector<ManifestEntry> entries;
  for (int i = 0; i < count; ++i) {
    c.utterances.push_back(testing::RandomSynthUtterance(rng, "utt" + std::to_string(i)));
    entries.push_back(testing::WriteSynthEntry(c.dir, c.utterances.back(), 0.97, rng));
  }
  WriteManifest(c.dir / "in.jsonl", entries);
  testing::WriteSynthVocab(c.dir / "vocab.txt");
  c.summary = CmdAlign({c.dir / "in.jsonl", c.dir / "post", c.dir / "vocab.txt",
                        c.dir / "aligned.jsonl"},
                       RunConfig{});
  return c;
}

TEST_CASE("manifest lines round trip and keep unknown keys") {
  const std::string line =
      R"({"id":"a","audio_path":"x.wav","text":"hi there","segments":[{"word":"hi","start_sample":0,"end_sample":10},{"word":"there","start_sample":10,"end_sample":20,"start_frame":1,"end_frame":2}],"speaker":{"name":"s1"},"duration":1.5})";
  const auto e = ParseManifestLine(line);
  CHECK(e.id == "a");
  REQUIRE(e.segments);
  CHECK((*e.segments)[1].frames == Range{1, 2});
  CHECK_FALSE((*e.segments)[0].frames.has_value());
  CHECK(e.extra.size() == 2);
  CHECK(ParseManifestLine(SerializeManifestEntry(e)) == e);
  CHECK(SerializeManifestEntry(e) == line);
}

TEST_CASE("manifest errors carry line numbers") {
  try {
    ParseManifest("{\"id\":\"a\",\"audio_path\":\"x\",\"text\":\"\"}\n\n{bad json\n");
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kFormat);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(ParseManifest(R"({"id":"a","audio_path":"x"})"), Error);
  CHECK_THROWS_AS(ParseManifest("{\"id\":\"a\",\"audio_path\":\"x\",\"text\":\"\"}\n"
                                "{\"id\":\"a\",\"audio_path\":\"y\",\"text\":\"\"}\n"),
                  Error);
}

TEST_CASE("align recovers generating boundaries") {
  const auto c = BuildAndAlign("align-ok", 20, 123);
  CHECK(c.summary.aligned == 20);
  CHECK(c.summary.rejected == 0);
  CHECK(c.summary.exit_code() == kExitOk);
  const auto out = ReadManifest(c.dir / "aligned.jsonl");
  REQUIRE(out.size() == 20);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto expected = testing::ExpectedRefinedFrames(c.utterances[i], kDefaultPadFrames);
    REQUIRE(out[i].segments);
    const auto& segs = *out[i].segments;
    REQUIRE(segs.size() == expected.size());
    for (std::size_t k = 0; k < segs.size(); ++k) {
      CHECK(segs[k].word == c.utterances[i].words[k]);
      CHECK(segs[k].frames == expected[k]);
      CHECK(segs[k].samples == Range{expected[k].begin * 640, expected[k].end * 640});
    }
  }
  CHECK(ReadFileBytes(c.summary.rejects_path).empty());
}

TEST_CASE("align reports rejects without dropping entries") {
  const auto dir = testing::TempDir("align-rejects");
  std::mt19937_64 rng(4);
  const auto good = testing::RandomSynthUtterance(rng, "good");
  std::vector<ManifestEntry> entries = {testing::WriteSynthEntry(dir, good, 0.97, rng)};

  // Too few frames: 3 frames for "abc|d" (5 labels).
  testing::SynthUtterance tiny;
  tiny.id = "short";
  tiny.words = {"a"};
  tiny.states = {1, 1, 2};
  tiny.num_frames = 3;
  auto short_entry = testing::WriteSynthEntry(dir, tiny, 0.97, rng);
  short_entry.text = "abc d";
  entries.push_back(short_entry);

  ManifestEntry missing = entries[0];
  missing.id = "nopost";
  entries.push_back(missing);

  ManifestEntry oov = entries[0];
  oov.id = "oov";
  oov.text = "xyz";
  oov.posterior_path = "post/good.ctcp";
  entries.push_back(oov);

  WriteManifest(dir / "in.jsonl", entries);
  testing::WriteSynthVocab(dir / "vocab.txt");
  const auto summary = CmdAlign(
      {dir / "in.jsonl", dir / "post", dir / "vocab.txt", dir / "out.jsonl"}, RunConfig{});
  CHECK(summary.aligned == 1);
  CHECK(summary.rejected == 3);
  CHECK(summary.exit_code() == kExitPartial);

  std::map<std::string, std::string> errors;
  const std::string rejects = ReadFileBytes(summary.rejects_path);
  std::size_t pos = 0;
  while (pos < rejects.size()) {
    const auto nl = rejects.find('\n', pos);
    const std::string line = rejects.substr(pos, nl - pos);
    pos = nl + 1;
    const auto id_at = line.find("\"id\":\"") + 6;
    const auto err_at = line.find("\"error\":\"") + 9;
    errors[line.substr(id_at, line.find('"', id_at) - id_at)] =
        line.substr(err_at, line.find('"', err_at) - err_at);
  }
  CHECK(errors["short"] == "infeasible-alignment");
  CHECK(errors["nopost"] == "io");
  CHECK(errors["oov"] == "invalid-transcript");
}

TEST_CASE("align of an empty manifest") {
  const auto dir = testing::TempDir("align-empty");
  WriteFileBytes(dir / "in.jsonl", "");
  testing::WriteSynthVocab(dir / "vocab.txt");
  const auto summary = CmdAlign(
      {dir / "in.jsonl", dir / "post", dir / "vocab.txt", dir / "out.jsonl"}, RunConfig{});
  CHECK(summary.exit_code() == kExitOk);
  CHECK(ReadFileBytes(dir / "out.jsonl").empty());
}

TEST_CASE("align clamps the last segment to the audio") {
  const Vocab vocab = testing::SynthVocab();
  const auto t = Transcript::FromText("ab", vocab);
  const auto target = ExpandWithBlanks(t.char_ids, vocab);
  const std::vector<std::int32_t> states = {0, 1, 3, 4};
  const auto grid = SynthPosteriors(states, target, vocab, 0.9);
  const auto segs = AlignUtterance(grid, t, vocab, 2000, RunConfig{});
  REQUIRE(segs.size() == 1);
  CHECK(segs[0].frames == Range{0, 4});
  CHECK(segs[0].samples == Range{0, 2000});
  CHECK_THROWS_AS(AlignUtterance(grid, t, vocab, 0, RunConfig{}), Error);
}

TEST_CASE("augment is deterministic and provenance closes") {
  const auto c = BuildAndAlign("augment-src", 12, 77);
  RunConfig cfg;
  cfg.master_seed = 5;
  cfg.shuffle_buffer = 4;
  const auto a = CmdAugment({c.dir / "aligned.jsonl", c.dir / "aug1"}, cfg);
  const auto b = CmdAugment({c.dir / "aligned.jsonl", c.dir / "aug2"}, cfg);
  CHECK(a.inputs == 12);
  CHECK(a.originals == 12);
  CHECK(a.augmented == b.augmented);
  CHECK(ReadFileBytes(c.dir / "aug1/manifest.jsonl") ==
        ReadFileBytes(c.dir / "aug2/manifest.jsonl"));

  std::map<std::string, AudioBuffer> sources;
  for (const auto& e : ReadManifest(c.dir / "aligned.jsonl")) {
    sources[e.id] = ReadWav(ResolvePath(c.dir / "aligned.jsonl", e.audio_path));
  }
  std::size_t checked = 0;
  for (const auto& e : ReadManifest(c.dir / "aug1/manifest.jsonl")) {
    const AudioBuffer audio = ReadWav(c.dir / "aug1" / e.audio_path);
    CHECK(ReadFileBytes(c.dir / "aug1" / e.audio_path) ==
          ReadFileBytes(c.dir / "aug2" / e.audio_path));
    if (!e.provenance) continue;
    std::vector<std::int16_t> rebuilt;
    for (const auto& p : e.provenance->pieces) {
      const auto& s = sources.at(p.source_id).samples;
      rebuilt.insert(rebuilt.end(), s.begin() + p.source_samples.begin,
                     s.begin() + p.source_samples.end);
    }
    CHECK(rebuilt == audio.samples);
    REQUIRE(e.segments->size() == e.provenance->words.size());
    for (std::size_t k = 0; k < e.segments->size(); ++k) {
      const auto& w = e.provenance->words[k];
      const auto& src = sources.at(w.source_id).samples;
      const Range r = (*e.segments)[k].samples;
      CHECK(std::equal(audio.samples.begin() + r.begin, audio.samples.begin() + r.end,
                       src.begin() + w.source_samples.begin));
    }
    ++checked;
  }
  CHECK(checked == a.augmented);
}

TEST_CASE("augment with the no-op branch forced reproduces the input manifest") {
  const auto c = BuildAndAlign("augment-noop", 5, 8);
  RunConfig cfg;
  cfg.policy.apply_prob = 0.0;
  const auto s = CmdAugment({c.dir / "aligned.jsonl", c.dir / "noop"}, cfg);
  CHECK(s.augmented == 0);
  const auto in = ReadManifest(c.dir / "aligned.jsonl");
  const auto out = ReadManifest(c.dir / "noop/manifest.jsonl");
  REQUIRE(in.size() == out.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    ManifestEntry expected = in[i];
    expected.audio_path = "audio/" + in[i].id + ".wav";
    CHECK(out[i] == expected);
    CHECK(ReadWav(c.dir / "noop" / out[i].audio_path) ==
          ReadWav(ResolvePath(c.dir / "aligned.jsonl", in[i].audio_path)));
  }
}

TEST_CASE("augment without originals and with a missing segment list") {
  const auto c = BuildAndAlign("augment-flags", 6, 9);
  RunConfig cfg;
  cfg.emit_originals = false;
  cfg.policy.apply_prob = 1.0;
  const auto s = CmdAugment({c.dir / "aligned.jsonl", c.dir / "only-aug"}, cfg);
  CHECK(s.originals == 0);
  CHECK(s.augmented >= 6);
  for (const auto& e : ReadManifest(c.dir / "only-aug/manifest.jsonl")) {
    CHECK(e.provenance.has_value());
  }

  auto entries = ReadManifest(c.dir / "aligned.jsonl");
  entries[2].segments.reset();
  WriteManifest(c.dir / "broken.jsonl", entries);
  try {
    CmdAugment({c.dir / "broken.jsonl", c.dir / "broken-out"}, cfg);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find(entries[2].id) != std::string::npos);
  }
}

TEST_CASE("augment stream pairs within the shuffle buffer") {
  std::vector<Utterance> corpus;
  for (int i = 0; i < 10; ++i) {
    corpus.push_back(testing::MakeUtterance("u" + std::to_string(i), i, {"a", "b", "c"}));
  }
  RunConfig cfg;
  cfg.shuffle_buffer = 3;
  AugmentStream stream(corpus, cfg);
  while (auto batch = stream.Next()) {
    const int partner = std::stoi(batch->partner_id.substr(1));
    const int offset = (partner - static_cast<int>(batch->index) + 10) % 10;
    CHECK(offset >= 1);
    CHECK(offset <= 2);
    for (std::size_t k = 0; k < batch->outcome.outputs.size(); ++k) {
      CHECK(batch->outcome.outputs[k].id ==
            corpus[batch->index].id + "-aug" + std::to_string(k));
    }
  }

  AugmentStream single({corpus[0]}, cfg);
  CHECK(single.Next()->partner_id == "u0");
  CHECK_FALSE(single.Next().has_value());

  cfg.shuffle_buffer = 1;
  CHECK_THROWS_AS(AugmentStream(corpus, cfg), Error);
}

TEST_CASE("score: identity, id mismatch and report fields") {
  const auto dir = testing::TempDir("score");
  WriteFileBytes(dir / "ref.jsonl",
                 R"({"id":"a","audio_path":"","text":"the cat sat"})"
                 "\n"
                 R"({"id":"b","audio_path":"","text":"on the mat"})"
                 "\n");
  WriteFileBytes(dir / "hyp.jsonl",
                 R"({"id":"b","audio_path":"","text":"on mat"})"
                 "\n"
                 R"({"id":"a","audio_path":"","text":"the bat sat down"})"
                 "\n");
  WriteFileBytes(dir / "base.jsonl",
                 R"({"id":"a","audio_path":"","text":"the cat"})"
                 "\n"
                 R"({"id":"b","audio_path":"","text":"on the hat"})"
                 "\n");
  WriteFileBytes(dir / "bad.jsonl", R"({"id":"c","audio_path":"","text":"x"})" "\n");

  ScoreRequest same{dir / "ref.jsonl", dir / "ref.jsonl"};
  const auto zero = CmdScore(same);
  CHECK(zero.ToText().find("WER 0.00  SUB 0.00  DEL 0.00  INS 0.00") != std::string::npos);

  ScoreRequest req{dir / "hyp.jsonl", dir / "hyp.jsonl"};
  req.ref = dir / "ref.jsonl";
  req.baseline = dir / "base.jsonl";
  req.bootstrap = true;
  req.bootstrap_options = {200, 0.05, 1};
  req.report_json = dir / "report.json";
  const auto r = CmdScore(req);
  CHECK(r.totals == ErrorCounts{4, 1, 1, 1, 6});
  CHECK(r.utterances == 2);
  REQUIRE(r.wer_ci);
  CHECK(r.wer_ci->lower <= r.wer_ci->mean);
  CHECK(r.wer_ci->mean <= r.wer_ci->upper);
  REQUIRE(r.baseline_rates);
  CHECK(r.baseline_rates->wer == doctest::Approx(100.0 / 3.0));
  CHECK(*r.rwerr == doctest::Approx(-50.0));
  REQUIRE(r.rwerr_ci);
  CHECK(r.rwerr_ci->lower <= r.rwerr_ci->upper);
  CHECK(r.ToText().find("rWERR -50.00%") != std::string::npos);
  CHECK(fs::exists(dir / "report.json"));
  CHECK(ReadFileBytes(dir / "report.json").find("\"wer_ci\"") != std::string::npos);

  try {
    CmdScore({dir / "ref.jsonl", dir / "bad.jsonl"});
    FAIL("expected error");
  } catch (const Error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("'a'") != std::string::npos);
    CHECK(msg.find("'c'") != std::string::npos);
  }
}

}  // namespace
}  // namespace segaug
