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

#ifndef SEGAUG_POSTERIOR_IO_HPP_
#define SEGAUG_POSTERIOR_IO_HPP_

#include <filesystem>
#include <span>
#include <string>

#include "segaug/ctc_align.hpp"
#include "segaug/posterior_grid.hpp"
#include "segaug/vocab.hpp"

namespace segaug {

// CTCP layout, all little-endian:
//   char[4] "CTCP" | u32 version (1) | u32 T | u32 S | f32[T*S] row-major
// Values are natural-log posteriors.
inline constexpr char kPosteriorMagic[4] = {'C', 'T', 'C', 'P'};
inline constexpr std::uint32_t kPosteriorVersion = 1;
inline constexpr double kPosteriorLoadTolerance = 1e-2;

std::string EncodePosteriors(const LogPosteriorGrid& grid);
LogPosteriorGrid DecodePosteriors(std::span<const char> bytes);

LogPosteriorGrid ReadPosteriors(const std::filesystem::path& path);
void WritePosteriors(const LogPosteriorGrid& grid,
                     const std::filesystem::path& path);

/// Builds a grid that puts probability `confidence` on the named symbol of
/// each frame and spreads the rest evenly over the other symbols.
/// Requires 0.5 < confidence < 1.
LogPosteriorGrid SynthPosteriors(std::span<const SymbolId> frame_symbols,
                                 const Vocab& vocab, double confidence);

/// Same, with frames given as states of a blank-augmented target.
LogPosteriorGrid SynthPosteriors(std::span<const std::int32_t> path_states,
                                 const BlankAugmentedTarget& target,
                                 const Vocab& vocab, double confidence);

}  // namespace segaug

#endif  // SEGAUG_POSTERIOR_IO_HPP_
