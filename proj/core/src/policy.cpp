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

#include <cmath>
#include <string>

#include "segaug/augment.hpp"
#include "segaug/error.hpp"

namespace segaug {

std::string_view AugmenterName(Augmenter a) {
  switch (a) {
    case Augmenter::kSegCrop: return "SegCrop";
    case Augmenter::kSegPerm: return "SegPerm";
    case Augmenter::kSegDrop: return "SegDrop";
  }
  return "?";
}

void AugPolicyConfig::Validate() const {
  auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!in_unit(apply_prob) || !in_unit(independent_prob) ||
      !in_unit(max_drop_fraction)) {
    throw Error(ErrorCode::kConfiguration, "policy probabilities must be in [0, 1]");
  }
  double sum = 0.0;
  for (double p : augmenter_probs) {
    if (!in_unit(p)) {
      throw Error(ErrorCode::kConfiguration, "augmenter weights must be in [0, 1]");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::kConfiguration,
                "augmenter weights sum to " + std::to_string(sum) + ", not 1");
  }
}

Augmenter ChooseAugmenter(double u, const AugPolicyConfig& cfg) {
  const auto& p = cfg.augmenter_probs;
  if (u < p[0]) return Augmenter::kSegCrop;
  if (u < p[0] + p[1]) return Augmenter::kSegPerm;
  return Augmenter::kSegDrop;
}

Utterance ApplyAugmenter(Augmenter a, const Utterance& u, DrawSource& draws,
                         const AugPolicyConfig& cfg) {
  switch (a) {
    case Augmenter::kSegCrop: return SegCrop(u, draws);
    case Augmenter::kSegPerm: return SegPerm(u, draws);
    case Augmenter::kSegDrop: return SegDrop(u, draws, cfg.max_drop_fraction);
  }
  throw Error(ErrorCode::kParameter, "unknown augmenter");
}

PolicyOutcome ApplyPolicy(const Utterance& x, const Utterance& y,
                          const AugPolicyConfig& cfg, DrawSource& draws) {
  PolicyOutcome outcome;
  if (draws.Uniform() > cfg.apply_prob) return outcome;

  auto augment = [&](const Utterance& u) {
    const Augmenter a = ChooseAugmenter(draws.Uniform(), cfg);
    outcome.augmenters.push_back(a);
    outcome.outputs.push_back(ApplyAugmenter(a, u, draws, cfg));
  };

  if (draws.Uniform() <= cfg.independent_prob) {
    outcome.branch = PolicyBranch::kIndependent;
    augment(x);
    augment(y);
  } else {
    outcome.branch = PolicyBranch::kMixed;
    augment(SegMix(x, y));
  }
  return outcome;
}

}  // namespace segaug
