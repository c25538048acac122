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
#include <set>

#include "segaug/error.hpp"
#include "segaug/pipeline.hpp"

namespace segaug {

void RunConfig::Validate() const {
  geometry.Validate();
  policy.Validate();
  if (shuffle_buffer < 2) {
    throw Error(ErrorCode::kConfiguration, "shuffle buffer must hold at least 2 entries");
  }
  if (pad_frames < 0) {
    throw Error(ErrorCode::kConfiguration, "pad_frames must be non-negative");
  }
}

AugmentStream::AugmentStream(std::vector<Utterance> corpus, RunConfig config)
    : corpus_(std::move(corpus)), config_(std::move(config)) {
  config_.Validate();
}

std::optional<AugmentBatch> AugmentStream::Next() {
  if (next_ >= corpus_.size()) return std::nullopt;
  const std::size_t i = next_++;
  const Utterance& x = corpus_[i];
  SeededDraws draws(config_.master_seed, "augment/" + x.id);

  const std::size_t n = corpus_.size();
  std::size_t partner = i;
  if (n > 1) {
    const auto pool = static_cast<std::int64_t>(
        std::min<std::size_t>(static_cast<std::size_t>(config_.shuffle_buffer) - 1, n - 1));
    partner = (i + static_cast<std::size_t>(draws.UniformInt(1, pool))) % n;
  }
  const Utterance& y = corpus_[partner];

  AugmentBatch batch;
  batch.index = i;
  batch.partner_id = y.id;
  batch.outcome = ApplyPolicy(x, y, config_.policy, draws);
  for (std::size_t k = 0; k < batch.outcome.outputs.size(); ++k) {
    batch.outcome.outputs[k].id = x.id + "-aug" + std::to_string(k);
  }
  return batch;
}

}  // namespace segaug
