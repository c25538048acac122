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

#include "segaug/manifest.hpp"

#include <set>
#include <sstream>

#include "json.hpp"
#include "segaug/error.hpp"
#include "segaug/wav_io.hpp"

namespace segaug {

namespace {

using Json = nlohmann::ordered_json;

const std::set<std::string, std::less<>> kKnownKeys = {
    "id", "audio_path", "text", "posterior_path", "segments", "provenance"};

template <typename T>
T Field(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error(ErrorCode::kFormat, std::string("missing field '") + key + "'");
  }
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::kFormat, std::string("field '") + key + "' has the wrong type");
  }
}

Json OriginToJson(const WordOrigin& o) {
  return Json{{"source", o.source_id},
              {"index", o.segment_index},
              {"start", o.source_samples.begin},
              {"end", o.source_samples.end}};
}

Json PieceToJson(const AudioPiece& p) {
  return Json{{"source", p.source_id},
              {"start", p.source_samples.begin},
              {"end", p.source_samples.end}};
}

}  // namespace

ManifestEntry ParseManifestLine(std::string_view line) {
  Json obj;
  try {
    obj = Json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kFormat, std::string("invalid JSON: ") + e.what());
  }
  if (!obj.is_object()) throw Error(ErrorCode::kFormat, "entry is not a JSON object");

  ManifestEntry e;
  e.id = Field<std::string>(obj, "id");
  if (e.id.empty()) throw Error(ErrorCode::kFormat, "empty id");
  e.audio_path = Field<std::string>(obj, "audio_path");
  e.text = Field<std::string>(obj, "text");
  if (obj.contains("posterior_path")) {
    e.posterior_path = Field<std::string>(obj, "posterior_path");
  }
  if (obj.contains("segments")) {
    const Json& segs = obj["segments"];
    if (!segs.is_array()) throw Error(ErrorCode::kFormat, "'segments' is not an array");
    std::vector<ManifestSegment> out;
    for (const Json& s : segs) {
      ManifestSegment m;
      m.word = Field<std::string>(s, "word");
      m.samples = {Field<std::int64_t>(s, "start_sample"),
                   Field<std::int64_t>(s, "end_sample")};
      if (s.contains("start_frame") || s.contains("end_frame")) {
        m.frames = Range{Field<std::int64_t>(s, "start_frame"),
                         Field<std::int64_t>(s, "end_frame")};
      }
      out.push_back(std::move(m));
    }
    e.segments = std::move(out);
  }
  if (obj.contains("provenance")) {
    const Json& p = obj["provenance"];
    Provenance prov;
    for (const Json& w : Field<Json>(p, "words")) {
      prov.words.push_back({Field<std::string>(w, "source"),
                            Field<std::int32_t>(w, "index"),
                            {Field<std::int64_t>(w, "start"), Field<std::int64_t>(w, "end")}});
    }
    for (const Json& a : Field<Json>(p, "pieces")) {
      prov.pieces.push_back({Field<std::string>(a, "source"),
                             {Field<std::int64_t>(a, "start"), Field<std::int64_t>(a, "end")}});
    }
    e.provenance = std::move(prov);
  }
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!kKnownKeys.contains(it.key())) e.extra.emplace_back(it.key(), it.value().dump());
  }
  return e;
}

std::string SerializeManifestEntry(const ManifestEntry& e) {
  Json obj;
  obj["id"] = e.id;
  obj["audio_path"] = e.audio_path;
  obj["text"] = e.text;
  if (e.posterior_path) obj["posterior_path"] = *e.posterior_path;
  if (e.segments) {
    Json segs = Json::array();
    for (const auto& s : *e.segments) {
      Json j{{"word", s.word},
             {"start_sample", s.samples.begin},
             {"end_sample", s.samples.end}};
      if (s.frames) {
        j["start_frame"] = s.frames->begin;
        j["end_frame"] = s.frames->end;
      }
      segs.push_back(std::move(j));
    }
    obj["segments"] = std::move(segs);
  }
  if (e.provenance) {
    Json words = Json::array();
    for (const auto& w : e.provenance->words) words.push_back(OriginToJson(w));
    Json pieces = Json::array();
    for (const auto& p : e.provenance->pieces) pieces.push_back(PieceToJson(p));
    obj["provenance"] = Json{{"words", std::move(words)}, {"pieces", std::move(pieces)}};
  }
  for (const auto& [key, raw] : e.extra) obj[key] = Json::parse(raw);
  return obj.dump();
}

std::vector<ManifestEntry> ParseManifest(std::string_view contents) {
  std::vector<ManifestEntry> entries;
  std::set<std::string, std::less<>> ids;
  std::istringstream in{std::string(contents)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      entries.push_back(ParseManifestLine(line));
    } catch (const Error& err) {
      throw Error(err.code(), "manifest line " + std::to_string(line_no) + ": " + err.what());
    }
    if (!ids.insert(entries.back().id).second) {
      throw Error(ErrorCode::kFormat, "manifest line " + std::to_string(line_no) +
                                          ": duplicate id '" + entries.back().id + "'");
    }
  }
  return entries;
}

std::vector<ManifestEntry> ReadManifest(const std::filesystem::path& path) {
  const std::string contents = ReadFileBytes(path);
  try {
    return ParseManifest(contents);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void WriteManifest(const std::filesystem::path& path,
                   const std::vector<ManifestEntry>& entries) {
  std::string out;
  for (const auto& e : entries) {
    out += SerializeManifestEntry(e);
    out += '\n';
  }
  WriteFileBytes(path, out);
}

std::filesystem::path ResolvePath(const std::filesystem::path& manifest_path,
                                  const std::string& entry_path) {
  std::filesystem::path p(entry_path);
  if (p.is_absolute()) return p;
  return manifest_path.parent_path() / p;
}

}  // namespace segaug
