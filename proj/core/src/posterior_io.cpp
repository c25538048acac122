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

#include "segaug/posterior_io.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <string>

#include "segaug/error.hpp"
#include "segaug/wav_io.hpp"

namespace segaug {

namespace {

constexpr std::size_t kHeaderBytes = 16;

void PutU32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::uint32_t GetU32(std::span<const char> b, std::size_t off) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) {
    v = (v << 8) | static_cast<unsigned char>(b[off + static_cast<std::size_t>(i)]);
  }
  return v;
}

}  // namespace

std::string EncodePosteriors(const LogPosteriorGrid& grid) {
  std::string out;
  out.reserve(kHeaderBytes + 4 * grid.values().size());
  out.append(kPosteriorMagic, 4);
  PutU32(out, kPosteriorVersion);
  PutU32(out, static_cast<std::uint32_t>(grid.num_frames()));
  PutU32(out, static_cast<std::uint32_t>(grid.num_symbols()));
  for (double v : grid.values()) {
    PutU32(out, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
  }
  return out;
}

LogPosteriorGrid DecodePosteriors(std::span<const char> bytes) {
  if (bytes.size() < kHeaderBytes ||
      std::memcmp(bytes.data(), kPosteriorMagic, 4) != 0) {
    throw Error(ErrorCode::kFormat, "bad CTCP magic");
  }
  const std::uint32_t version = GetU32(bytes, 4);
  if (version != kPosteriorVersion) {
    throw Error(ErrorCode::kUnsupported,
                "CTCP version " + std::to_string(version) + " not supported");
  }
  const std::uint64_t frames = GetU32(bytes, 8);
  const std::uint64_t symbols = GetU32(bytes, 12);
  const std::uint64_t payload = 4 * frames * symbols;
  if (bytes.size() - kHeaderBytes != payload) {
    throw Error(ErrorCode::kTruncated,
                "CTCP payload is " + std::to_string(bytes.size() - kHeaderBytes) +
                    " bytes, header implies " + std::to_string(payload));
  }
  std::vector<double> values(frames * symbols);
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = std::bit_cast<float>(GetU32(bytes, kHeaderBytes + 4 * i));
  }
  return LogPosteriorGrid(frames, symbols, std::move(values),
                          kPosteriorLoadTolerance);
}

LogPosteriorGrid ReadPosteriors(const std::filesystem::path& path) {
  const std::string bytes = ReadFileBytes(path);
  try {
    return DecodePosteriors(bytes);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void WritePosteriors(const LogPosteriorGrid& grid,
                     const std::filesystem::path& path) {
  WriteFileBytes(path, EncodePosteriors(grid));
}

LogPosteriorGrid SynthPosteriors(std::span<const SymbolId> frame_symbols,
                                 const Vocab& vocab, double confidence) {
  if (!(confidence > 0.5 && confidence < 1.0)) {
    throw Error(ErrorCode::kParameter,
                "synthetic confidence must lie in (0.5, 1)");
  }
  if (frame_symbols.empty()) {
    throw Error(ErrorCode::kParameter, "synthetic grid needs at least one frame");
  }
  const std::size_t num_symbols = vocab.size();
  if (num_symbols < 2) {
    throw Error(ErrorCode::kParameter, "synthetic grid needs two symbols");
  }
  const double on = std::log(confidence);
  const double off =
      std::log((1.0 - confidence) / static_cast<double>(num_symbols - 1));
  std::vector<double> values(frame_symbols.size() * num_symbols, off);
  for (std::size_t t = 0; t < frame_symbols.size(); ++t) {
    if (!vocab.Contains(frame_symbols[t])) {
      throw Error(ErrorCode::kParameter,
                  "frame " + std::to_string(t) + " names an unknown symbol");
    }
    values[t * num_symbols + static_cast<std::size_t>(frame_symbols[t])] = on;
  }
  return LogPosteriorGrid(frame_symbols.size(), num_symbols, std::move(values));
}

LogPosteriorGrid SynthPosteriors(std::span<const std::int32_t> path_states,
                                 const BlankAugmentedTarget& target,
                                 const Vocab& vocab, double confidence) {
  std::vector<SymbolId> symbols;
  symbols.reserve(path_states.size());
  for (std::int32_t s : path_states) {
    if (s < 0 || static_cast<std::size_t>(s) >= target.states.size()) {
      throw Error(ErrorCode::kParameter, "path state outside target");
    }
    symbols.push_back(target.states[static_cast<std::size_t>(s)]);
  }
  return SynthPosteriors(symbols, vocab, confidence);
}

}  // namespace segaug
