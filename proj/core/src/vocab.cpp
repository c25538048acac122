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

#include "segaug/vocab.hpp"

#include <fstream>
#include <sstream>

#include "segaug/error.hpp"

namespace segaug {

Vocab::Vocab(std::vector<std::string> symbols, SymbolId blank_id,
             SymbolId delimiter_id)
    : symbols_(std::move(symbols)),
      blank_id_(blank_id),
      delimiter_id_(delimiter_id) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].empty()) {
      throw Error(ErrorCode::kConfiguration,
                  "vocab symbol " + std::to_string(i) + " is empty");
    }
    if (!index_.emplace(symbols_[i], static_cast<SymbolId>(i)).second) {
      throw Error(ErrorCode::kConfiguration,
                  "duplicate vocab symbol '" + symbols_[i] + "'");
    }
  }
  if (!Contains(blank_id_)) {
    throw Error(ErrorCode::kConfiguration, "blank id out of range");
  }
  if (!Contains(delimiter_id_)) {
    throw Error(ErrorCode::kConfiguration, "word delimiter id out of range");
  }
  if (blank_id_ == delimiter_id_) {
    throw Error(ErrorCode::kConfiguration,
                "word delimiter must differ from blank");
  }
}

Vocab Vocab::Parse(std::string_view contents) {
  std::vector<std::string> symbols;
  std::istringstream in{std::string(contents)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    symbols.push_back(line);
  }
  SymbolId blank = -1;
  SymbolId delim = -1;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (symbols[i] == kDefaultBlank) blank = static_cast<SymbolId>(i);
    if (symbols[i] == kDefaultDelimiter) delim = static_cast<SymbolId>(i);
  }
  if (blank < 0) {
    throw Error(ErrorCode::kConfiguration, "vocab has no <blank> symbol");
  }
  if (delim < 0) {
    throw Error(ErrorCode::kConfiguration, "vocab has no '|' word delimiter");
  }
  return Vocab(std::move(symbols), blank, delim);
}

Vocab Vocab::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open vocab " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return Parse(ss.str());
}

const std::string& Vocab::symbol(SymbolId id) const {
  if (!Contains(id)) {
    throw Error(ErrorCode::kInvalidTranscript,
                "symbol id " + std::to_string(id) + " out of vocab range");
  }
  return symbols_[static_cast<std::size_t>(id)];
}

SymbolId Vocab::Find(std::string_view symbol) const {
  auto it = index_.find(std::string(symbol));
  return it == index_.end() ? -1 : it->second;
}

std::vector<std::string> SplitCodePoints(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    std::size_t len = 0;
    if (lead < 0x80) len = 1;
    else if ((lead >> 5) == 0x6) len = 2;
    else if ((lead >> 4) == 0xE) len = 3;
    else if ((lead >> 3) == 0x1E) len = 4;
    if (len == 0 || i + len > text.size()) {
      throw Error(ErrorCode::kInvalidTranscript, "malformed UTF-8 in transcript");
    }
    for (std::size_t k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(text[i + k]) >> 6) != 0x2) {
        throw Error(ErrorCode::kInvalidTranscript,
                    "malformed UTF-8 in transcript");
      }
    }
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

std::vector<std::string> SplitWords(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  std::string w;
  while (in >> w) words.push_back(std::move(w));
  return words;
}

Transcript Transcript::FromText(std::string_view text, const Vocab& vocab) {
  return FromWords(SplitWords(text), vocab);
}

Transcript Transcript::FromWords(std::vector<std::string> words,
                                 const Vocab& vocab) {
  Transcript t;
  for (std::size_t w = 0; w < words.size(); ++w) {
    if (w > 0) {
      t.char_ids.push_back(vocab.delimiter_id());
      t.char_owner.push_back(-1);
    }
    if (words[w].empty()) {
      throw Error(ErrorCode::kInvalidTranscript, "empty word in transcript");
    }
    for (const auto& cp : SplitCodePoints(words[w])) {
      const SymbolId id = vocab.Find(cp);
      if (id < 0 || id == vocab.blank_id() || id == vocab.delimiter_id()) {
        throw Error(ErrorCode::kInvalidTranscript,
                    "character '" + cp + "' of word '" + words[w] +
                        "' is not a vocab label");
      }
      t.char_ids.push_back(id);
      t.char_owner.push_back(static_cast<std::int32_t>(w));
    }
  }
  t.words = std::move(words);
  return t;
}

std::string Transcript::Text() const {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += ' ';
    out += words[i];
  }
  return out;
}

std::vector<std::string> Transcript::RenderWords(
    const std::vector<SymbolId>& char_ids, const Vocab& vocab) {
  std::vector<std::string> words;
  std::string current;
  for (SymbolId id : char_ids) {
    if (id == vocab.delimiter_id()) {
      words.push_back(std::move(current));
      current.clear();
    } else {
      current += vocab.symbol(id);
    }
  }
  if (!char_ids.empty()) words.push_back(std::move(current));
  return words;
}

}  // namespace segaug
