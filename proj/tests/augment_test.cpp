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

#include <map>
#include <random>

#include "doctest.h"
#include "segaug/augment.hpp"
#include "segaug/error.hpp"
#include "support/test_support.hpp"

namespace segaug {
namespace {

using testing::CheckProvenance;
using testing::MakeUtterance;
using testing::ScriptedDraws;

std::vector<std::string> Words(std::initializer_list<const char*> w) {
  return {w.begin(), w.end()};
}

std::vector<std::int16_t> Slice(const Utterance& u, Range r) {
  return {u.audio->samples.begin() + r.begin, u.audio->samples.begin() + r.end};
}

std::vector<std::int16_t> WordAudio(const Utterance& u, std::size_t k) {
  return Slice(u, u.segments[k].samples);
}

template <typename... Parts>
std::vector<std::int16_t> Concat(const Parts&... parts) {
  std::vector<std::int16_t> out;
  (out.insert(out.end(), parts.begin(), parts.end()), ...);
  return out;
}

TEST_CASE("FromSource validates segments") {
  AudioBuffer a;
  a.samples.assign(100, 0);
  CHECK_THROWS_AS(Utterance::FromSource("x", a, {{"w", {10, 5}}}), Error);
  CHECK_THROWS_AS(Utterance::FromSource("x", a, {{"w", {0, 50}}, {"v", {40, 60}}}), Error);
  CHECK_THROWS_AS(Utterance::FromSource("x", a, {{"w", {90, 101}}}), Error);
  const auto u = Utterance::FromSource("x", a, {{"w", {0, 50}}, {"v", {50, 60}}});
  CHECK_NOTHROW(u.Validate());
  CHECK(u.Text() == "w v");
}

TEST_CASE("SegDrop removes the scripted words") {
  const auto u = MakeUtterance("u", 1, Words({"w0", "w1", "w2", "w3"}));
  ScriptedDraws draws({}, {2, 1, 3});
  const auto out = SegDrop(u, draws);
  CHECK(draws.exhausted());
  CHECK(draws.int_calls() ==
        std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 2}, {0, 3}, {1, 3}});
  CHECK(out.Words() == Words({"w0", "w2"}));
  CHECK(out.audio->samples == Concat(WordAudio(u, 0), WordAudio(u, 2)));
  CHECK(out.segments[1].samples == Range{20, 40});
  CHECK(out.origins[1].segment_index == 2);
  CHECK(CheckProvenance(out, {{"u", u.audio.get()}}).empty());
}

TEST_CASE("SegDrop on a single word is the identity") {
  const auto u = MakeUtterance("u", 1, Words({"only"}));
  ScriptedDraws draws({}, {});
  const auto out = SegDrop(u, draws);
  CHECK(out.Words() == u.Words());
  CHECK(out.audio->samples == u.audio->samples);
  CHECK(out.segments == u.segments);
}

TEST_CASE("SegDrop honours a custom maximum fraction") {
  const auto u = MakeUtterance("u", 1, Words({"a", "b", "c", "d"}));
  ScriptedDraws draws({}, {3, 0, 1, 2});
  const auto out = SegDrop(u, draws, 0.75);
  CHECK(draws.int_calls().front() == std::pair<std::int64_t, std::int64_t>{1, 3});
  CHECK(out.Words() == Words({"d"}));
}

TEST_CASE("SegPerm follows Fisher-Yates") {
  const auto u = MakeUtterance("u", 2, Words({"w0", "w1", "w2"}));
  ScriptedDraws draws({}, {1, 0});
  const auto out = SegPerm(u, draws);
  CHECK(draws.int_calls() ==
        std::vector<std::pair<std::int64_t, std::int64_t>>{{0, 2}, {0, 1}});
  CHECK(out.Words() == Words({"w2", "w0", "w1"}));
  CHECK(out.audio->samples == Concat(WordAudio(u, 2), WordAudio(u, 0), WordAudio(u, 1)));
  CHECK(CheckProvenance(out, {{"u", u.audio.get()}}).empty());

  const auto one = MakeUtterance("v", 2, Words({"solo"}));
  ScriptedDraws none({}, {});
  const auto same = SegPerm(one, none);
  CHECK(same.Words() == one.Words());
  // Only word-owned samples survive: the gaps are gone.
  CHECK(same.audio->samples == WordAudio(one, 0));
}

TEST_CASE("SegCrop keeps one contiguous slice") {
  const auto u = MakeUtterance("u", 3, Words({"w0", "w1", "w2", "w3", "w4"}));
  ScriptedDraws draws({}, {1, 3});
  const auto out = SegCrop(u, draws);
  CHECK(draws.int_calls() ==
        std::vector<std::pair<std::int64_t, std::int64_t>>{{0, 4}, {1, 4}});
  CHECK(out.Words() == Words({"w1", "w2", "w3"}));
  const Range span{u.segments[1].samples.begin, u.segments[3].samples.end};
  CHECK(out.audio->samples == Slice(u, span));
  CHECK(out.segments[0].samples.begin == 0);
  CHECK(out.lineage.size() == 1);
  CHECK(CheckProvenance(out, {{"u", u.audio.get()}}).empty());

  ScriptedDraws full({}, {0, 4});
  const auto whole = SegCrop(u, full);
  CHECK(whole.Words() == u.Words());
  CHECK(whole.audio->samples ==
        Slice(u, {u.segments[0].samples.begin, u.segments[4].samples.end}));

  const auto one = MakeUtterance("v", 3, Words({"x"}));
  ScriptedDraws single({}, {0, 0});
  CHECK(SegCrop(one, single).Words() == one.Words());
}

TEST_CASE("SegMix concatenates audio and words") {
  const auto x = MakeUtterance("x", 1, Words({"a", "b"}));
  const auto y = MakeUtterance("y", 2, Words({"c", "d", "e"}));
  const auto xy = SegMix(x, y);
  CHECK(xy.id == "x+y");
  CHECK(xy.Words() == Words({"a", "b", "c", "d", "e"}));
  CHECK(xy.num_samples() == x.num_samples() + y.num_samples());
  CHECK(xy.segments[2].samples.begin == y.segments[0].samples.begin + x.num_samples());
  CHECK(CheckProvenance(xy, {{"x", x.audio.get()}, {"y", y.audio.get()}}).empty());

  const auto empty = MakeUtterance("z", 3, {});
  const auto xz = SegMix(x, empty);
  CHECK(xz.Words() == x.Words());
  CHECK(xz.num_samples() == x.num_samples() + empty.num_samples());

  const auto slow = MakeUtterance("s", 4, Words({"f"}), 20, 5, 8000);
  CHECK_THROWS_AS(SegMix(x, slow), Error);
  try {
    SegMix(x, slow);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIncompatiblePair);
  }
}

TEST_CASE("crop across a mix join keeps gap audio and provenance") {
  const auto x = MakeUtterance("x", 1, Words({"a", "b"}));
  const auto y = MakeUtterance("y", 2, Words({"c", "d"}));
  const auto xy = SegMix(x, y);
  ScriptedDraws draws({}, {1, 2});
  const auto out = SegCrop(xy, draws);
  CHECK(out.Words() == Words({"b", "c"}));
  CHECK(out.lineage.size() == 2);
  CHECK(CheckProvenance(out, {{"x", x.audio.get()}, {"y", y.audio.get()}}).empty());
}

TEST_CASE("augmenter choice uses cumulative thresholds") {
  const AugPolicyConfig cfg;
  CHECK(ChooseAugmenter(0.0, cfg) == Augmenter::kSegCrop);
  CHECK(ChooseAugmenter(0.0999, cfg) == Augmenter::kSegCrop);
  CHECK(ChooseAugmenter(0.1, cfg) == Augmenter::kSegPerm);
  CHECK(ChooseAugmenter(0.6999, cfg) == Augmenter::kSegPerm);
  CHECK(ChooseAugmenter(0.7, cfg) == Augmenter::kSegDrop);
  CHECK(ChooseAugmenter(0.9999, cfg) == Augmenter::kSegDrop);
}

TEST_CASE("policy: no-op branch") {
  const auto x = MakeUtterance("x", 1, Words({"a", "b", "c"}));
  const auto y = MakeUtterance("y", 2, Words({"d", "e", "f", "g"}));
  ScriptedDraws draws({0.6}, {});
  const auto out = ApplyPolicy(x, y, {}, draws);
  CHECK(out.branch == PolicyBranch::kNone);
  CHECK(out.outputs.empty());
  CHECK(draws.exhausted());

  ScriptedDraws edge({0.5, 0.75, 0.5, 0.5}, {0, 0, 0, 0, 0});
  CHECK(ApplyPolicy(x, y, {}, edge).branch == PolicyBranch::kIndependent);
}

TEST_CASE("policy: independent branch augments both operands") {
  const auto x = MakeUtterance("x", 1, Words({"a", "b", "c"}));
  const auto y = MakeUtterance("y", 2, Words({"d", "e", "f", "g"}));
  // SegPerm on x draws j at i=2 and i=1; SegDrop on y draws k then one j.
  ScriptedDraws draws({0.3, 0.5, 0.5, 0.95}, {0, 0, 1, 2});
  const auto out = ApplyPolicy(x, y, {}, draws);
  CHECK(draws.exhausted());
  CHECK(out.branch == PolicyBranch::kIndependent);
  CHECK(out.augmenters == std::vector<Augmenter>{Augmenter::kSegPerm, Augmenter::kSegDrop});
  REQUIRE(out.outputs.size() == 2);
  CHECK(out.outputs[0].Words() == Words({"b", "c", "a"}));
  CHECK(out.outputs[1].Words() == Words({"d", "e", "g"}));
}

TEST_CASE("policy: mixed branch crops the concatenation") {
  const auto x = MakeUtterance("x", 1, Words({"a", "b", "c"}));
  const auto y = MakeUtterance("y", 2, Words({"d", "e", "f", "g"}));
  ScriptedDraws draws({0.3, 0.9, 0.05}, {2, 4});
  const auto out = ApplyPolicy(x, y, {}, draws);
  CHECK(draws.exhausted());
  CHECK(out.branch == PolicyBranch::kMixed);
  CHECK(out.augmenters == std::vector<Augmenter>{Augmenter::kSegCrop});
  REQUIRE(out.outputs.size() == 1);
  CHECK(out.outputs[0].Words() == Words({"c", "d", "e"}));
  CHECK(CheckProvenance(out.outputs[0], {{"x", x.audio.get()}, {"y", y.audio.get()}}).empty());
}

TEST_CASE("policy config validation") {
  AugPolicyConfig cfg;
  CHECK_NOTHROW(cfg.Validate());
  cfg.augmenter_probs = {0.2, 0.6, 0.3};
  CHECK_THROWS_AS(cfg.Validate(), Error);
  cfg = {};
  cfg.apply_prob = 1.5;
  CHECK_THROWS_AS(cfg.Validate(), Error);
}

TEST_CASE("seeded draws are reproducible and keyed") {
  SeededDraws a(42, "utt-1");
  SeededDraws b(42, "utt-1");
  SeededDraws c(42, "utt-2");
  SeededDraws d(43, "utt-1");
  bool differs_c = false;
  bool differs_d = false;
  for (int i = 0; i < 64; ++i) {
    const double va = a.Uniform();
    CHECK(va == b.Uniform());
    CHECK(va >= 0.0);
    CHECK(va < 1.0);
    differs_c |= va != c.Uniform();
    differs_d |= va != d.Uniform();
  }
  CHECK(differs_c);
  CHECK(differs_d);
}

TEST_CASE("seeded integer draws are uniform over the closed range") {
  SeededDraws draws(7, "ints");
  std::map<std::int64_t, int> hist;
  const int n = 60000;
  for (int i = 0; i < n; ++i) ++hist[draws.UniformInt(-1, 4)];
  CHECK(hist.size() == 6);
  for (const auto& [v, count] : hist) {
    CHECK(v >= -1);
    CHECK(v <= 4);
    CHECK(std::abs(count - n / 6) < 500);
  }
  CHECK(draws.UniformInt(3, 3) == 3);
}

}  // namespace
}  // namespace segaug
