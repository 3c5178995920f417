// Copyright 2026 The lyreval Authors
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

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lyreval {

struct RawTranscript {
  std::string text;  // UTF-8, may span several lines
  std::string language;
};

// One token of a lyric or hypothesis. Non-word tokens (punctuation,
// parentheses, line breaks) are kept so that line indices and backing-vocal
// spans can be recovered; metrics only look at word tokens.
struct Token {
  std::string surface;
  std::string norm;  // empty for non-word tokens
  bool is_word = false;
  bool is_backing = false;
  bool is_nonlexical = false;
  int line_index = 0;

  bool operator==(const Token&) const = default;
};

// (line_index, word_index) pairs, word_index counting word tokens only.
struct NonLexicalAnnotation {
  std::string song_id;
  std::vector<std::pair<int, int>> word_positions;
};

// Splits a reference transcript into tokens. Words inside parentheses (any
// depth) are backing vocals. Line breaks become non-word "\n" tokens and
// advance line_index. Throws UnbalancedParentheses, or Error(kInvalidArgument)
// on malformed UTF-8.
std::vector<Token> tokenize_lyrics(const RawTranscript& raw);

// Joins lines with '\n' and tokenizes them, so token line_index equals the
// position in `lines`. Embedded line breaks inside a line are folded to
// spaces.
std::vector<Token> tokenize_lines(std::span<const std::string> lines,
                                  const std::string& language);

// Same rules as tokenize_lyrics but never throws on unmatched parentheses;
// transcriber output is not guaranteed to be well formed.
std::vector<Token> tokenize_hypothesis(std::string_view text);

std::vector<Token> strip_nonwords(std::span<const Token> tokens);

// Throws DanglingAnnotation if a position does not resolve to a word.
std::vector<Token> apply_nonlexical_annotations(
    std::vector<Token> tokens, const NonLexicalAnnotation& annotation);

// NFC + full case folding + apostrophe unification, for a single word.
std::string normalize_word(std::string_view word);

}  // namespace lyreval
