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

#include "segaug/wav_io.hpp"

#include <cstring>
#include <fstream>
#include <sstream>

#include "segaug/error.hpp"

namespace segaug {

namespace {

void PutU16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
}

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

std::uint16_t GetU16(std::span<const char> b, std::size_t off) {
  return static_cast<std::uint16_t>(static_cast<unsigned char>(b[off]) |
                                    (static_cast<unsigned char>(b[off + 1]) << 8));
}

bool TagIs(std::span<const char> b, std::size_t off, const char* tag) {
  return std::memcmp(b.data() + off, tag, 4) == 0;
}

}  // namespace

std::string EncodeWav(const AudioBuffer& audio) {
  const auto data_bytes = static_cast<std::uint32_t>(audio.samples.size() * 2);
  std::string out;
  out.reserve(44 + data_bytes);
  out += "RIFF";
  PutU32(out, 36 + data_bytes);
  out += "WAVE";
  out += "fmt ";
  PutU32(out, 16);
  PutU16(out, 1);  // PCM
  PutU16(out, 1);  // mono
  PutU32(out, static_cast<std::uint32_t>(audio.sample_rate_hz));
  PutU32(out, static_cast<std::uint32_t>(audio.sample_rate_hz) * 2);
  PutU16(out, 2);
  PutU16(out, 16);
  out += "data";
  PutU32(out, data_bytes);
  for (std::int16_t s : audio.samples) PutU16(out, static_cast<std::uint16_t>(s));
  return out;
}

AudioBuffer DecodeWav(std::span<const char> bytes) {
  if (bytes.size() < 12 || !TagIs(bytes, 0, "RIFF") || !TagIs(bytes, 8, "WAVE")) {
    throw Error(ErrorCode::kFormat, "not a RIFF/WAVE file");
  }
  bool have_fmt = false;
  AudioBuffer audio;
  std::size_t off = 12;
  while (off + 8 <= bytes.size()) {
    const std::uint32_t chunk_size = GetU32(bytes, off + 4);
    const std::size_t body = off + 8;
    if (chunk_size > bytes.size() - body) {
      throw Error(ErrorCode::kFormat, "WAV chunk runs past end of file");
    }
    if (TagIs(bytes, off, "fmt ")) {
      if (chunk_size < 16) throw Error(ErrorCode::kFormat, "short fmt chunk");
      const std::uint16_t format = GetU16(bytes, body);
      const std::uint16_t channels = GetU16(bytes, body + 2);
      const std::uint16_t bits = GetU16(bytes, body + 14);
      if (format != 1) {
        throw Error(ErrorCode::kUnsupported, "only PCM WAV is supported");
      }
      if (channels != 1) {
        throw Error(ErrorCode::kUnsupported,
                    "only mono WAV is supported, got " +
                        std::to_string(channels) + " channels");
      }
      if (bits != 16) {
        throw Error(ErrorCode::kUnsupported,
                    "only 16-bit WAV is supported, got " +
                        std::to_string(bits) + " bits");
      }
      audio.sample_rate_hz = static_cast<std::int32_t>(GetU32(bytes, body + 4));
      have_fmt = true;
    } else if (TagIs(bytes, off, "data")) {
      if (!have_fmt) throw Error(ErrorCode::kFormat, "data chunk before fmt");
      if (chunk_size % 2 != 0) {
        throw Error(ErrorCode::kFormat, "odd-sized 16-bit data chunk");
      }
      audio.samples.resize(chunk_size / 2);
      for (std::size_t i = 0; i < audio.samples.size(); ++i) {
        audio.samples[i] = static_cast<std::int16_t>(GetU16(bytes, body + 2 * i));
      }
      return audio;
    }
    off = body + chunk_size + (chunk_size & 1);
  }
  throw Error(ErrorCode::kFormat, "WAV file has no data chunk");
}

std::string ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFileBytes(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

AudioBuffer ReadWav(const std::filesystem::path& path) {
  const std::string bytes = ReadFileBytes(path);
  try {
    return DecodeWav(bytes);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void WriteWav(const AudioBuffer& audio, const std::filesystem::path& path) {
  WriteFileBytes(path, EncodeWav(audio));
}

}  // namespace segaug
