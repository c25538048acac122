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

#ifndef SEGAUG_WAV_IO_HPP_
#define SEGAUG_WAV_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace segaug {

/// Mono signed 16-bit PCM.
struct AudioBuffer {
  std::vector<std::int16_t> samples;
  std::int32_t sample_rate_hz = 16000;

  std::int64_t size() const { return static_cast<std::int64_t>(samples.size()); }
  bool operator==(const AudioBuffer&) const = default;
};

/// Canonical 44-byte-header RIFF/WAVE encoding.
std::string EncodeWav(const AudioBuffer& audio);
/// Accepts any chunk layout with a PCM fmt chunk; only mono 16-bit is
/// supported (kUnsupported otherwise). Broken RIFF structure is kFormat.
AudioBuffer DecodeWav(std::span<const char> bytes);

AudioBuffer ReadWav(const std::filesystem::path& path);
void WriteWav(const AudioBuffer& audio, const std::filesystem::path& path);

/// Whole-file helpers; throw kIo on failure.
std::string ReadFileBytes(const std::filesystem::path& path);
void WriteFileBytes(const std::filesystem::path& path, std::string_view bytes);

}  // namespace segaug

#endif  // SEGAUG_WAV_IO_HPP_
