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

#ifndef SEGAUG_VOCAB_HPP_
#define SEGAUG_VOCAB_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace segaug {

using SymbolId = std::int32_t;

/// Character vocabulary of a CTC model. Every symbol is one UTF-8 code
/// point, except the blank which may be any unique token (e.g. "<blank>").
class Vocab {
 public:
  static constexpr std::string_view kDefaultBlank = "<blank>";
  static constexpr std::string_view kDefaultDelimiter = "|";

  Vocab(std::vector<std::string> symbols, SymbolId blank_id,
        SymbolId delimiter_id);

  /// One symbol per line; line index is the symbol id. The blank is the
  /// line reading "<blank>" and the word delimiter the line reading "|".
  static Vocab Load(const std::filesystem::path& path);
  static Vocab Parse(std::string_view contents);

  std::size_t size() const { return symbols_.size(); }
  SymbolId blank_id() const { return blank_id_; }
  SymbolId delimiter_id() const { return delimiter_id_; }
  const std::string& symbol(SymbolId id) const;
  const std::vector<std::string>& symbols() const { return symbols_; }
  bool Contains(SymbolId id) const {
    return id >= 0 && static_cast<std::size_t>(id) < symbols_.size();
  }
  /// Returns -1 when the symbol is not in the vocabulary.
  SymbolId Find(std::string_view symbol) const;

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, SymbolId> index_;
  SymbolId blank_id_;
  SymbolId delimiter_id_;
};

/// Splits a UTF-8 string into code points. Throws kInvalidTranscript on
/// malformed input.
std::vector<std::string> SplitCodePoints(std::string_view text);

/// Whitespace tokenization shared by transcripts and scoring.
std::vector<std::string> SplitWords(std::string_view text);

/// A word sequence together with its character rendering: characters of
/// consecutive words are separated by one delimiter symbol.
///
/// `char_owner[c]` is the word index owning character c, or -1 for a
/// delimiter.
struct Transcript {
  std::vector<std::string> words;
  std::vector<SymbolId> char_ids;
  std::vector<std::int32_t> char_owner;

  std::size_t num_words() const { return words.size(); }

  static Transcript FromText(std::string_view text, const Vocab& vocab);
  static Transcript FromWords(std::vector<std::string> words,
                              const Vocab& vocab);

  /// Joins the words with single spaces.
  std::string Text() const;
  /// Recovers the word sequence from `char_ids` by splitting on the delimiter.
  static std::vector<std::string> RenderWords(
      const std::vector<SymbolId>& char_ids, const Vocab& vocab);
};

}  // namespace segaug

#endif  // SEGAUG_VOCAB_HPP_
