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

#ifndef SEGAUG_MANIFEST_HPP_
#define SEGAUG_MANIFEST_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "segaug/segmentation.hpp"
#include "segaug/utterance.hpp"

namespace segaug {

struct ManifestSegment {
  std::string word;
  Range samples;
  std::optional<Range> frames;

  bool operator==(const ManifestSegment&) const = default;
};

struct Provenance {
  std::vector<WordOrigin> words;
  std::vector<AudioPiece> pieces;

  bool operator==(const Provenance&) const = default;
};

/// One JSON-lines manifest record:
///
///   {"id": "...", "audio_path": "...", "text": "...",
///    "posterior_path": "...",                       (optional)
///    "segments": [{"word", "start_sample", "end_sample",
///                  "start_frame", "end_frame"}],     (optional, frames too)
///    "provenance": {"words": [{"source", "index", "start", "end"}],
///                   "pieces": [{"source", "start", "end"}]}}   (optional)
///
/// Unknown keys are kept verbatim and written back after the known ones.
struct ManifestEntry {
  std::string id;
  std::string audio_path;
  std::string text;
  std::optional<std::string> posterior_path;
  std::optional<std::vector<ManifestSegment>> segments;
  std::optional<Provenance> provenance;
  std::vector<std::pair<std::string, std::string>> extra;

  bool operator==(const ManifestEntry&) const = default;
};

/// Throws kFormat on malformed JSON or missing/mistyped fields.
ManifestEntry ParseManifestLine(std::string_view line);
/// Single line, no trailing newline, stable key order.
std::string SerializeManifestEntry(const ManifestEntry& entry);

/// Blank lines are skipped. Errors carry the 1-based line number; duplicate
/// ids are rejected.
std::vector<ManifestEntry> ParseManifest(std::string_view contents);
std::vector<ManifestEntry> ReadManifest(const std::filesystem::path& path);
void WriteManifest(const std::filesystem::path& path,
                   const std::vector<ManifestEntry>& entries);

/// Relative paths resolve against the manifest's directory.
std::filesystem::path ResolvePath(const std::filesystem::path& manifest_path,
                                  const std::string& entry_path);

}  // namespace segaug

#endif  // SEGAUG_MANIFEST_HPP_
