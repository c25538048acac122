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

#ifndef SEGAUG_DRAWS_HPP_
#define SEGAUG_DRAWS_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace segaug {

/// Source of the random decisions taken by the augmenters.
class DrawSource {
 public:
  virtual ~DrawSource() = default;

  /// Uniform real in [0, 1).
  virtual double Uniform() = 0;
  /// Uniform integer in the closed range [lo, hi]; requires lo <= hi.
  virtual std::int64_t UniformInt(std::int64_t lo, std::int64_t hi) = 0;
};

/// 64-bit FNV-1a; used to key streams by utterance id.
std::uint64_t HashKey(std::string_view key);

/// Deterministic stream keyed by (master_seed, key). The engine and the
/// real/integer conversions are fully specified, so streams are identical
/// across standard libraries.
class SeededDraws final : public DrawSource {
 public:
  SeededDraws(std::uint64_t master_seed, std::string_view key);

  double Uniform() override;
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi) override;

 private:
  std::mt19937_64 engine_;
};

}  // namespace segaug

#endif  // SEGAUG_DRAWS_HPP_
