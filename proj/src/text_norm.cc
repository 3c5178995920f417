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

#include "lyreval/text_norm.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/ustring.h>

#include <map>

#include "lyreval/error.h"

namespace lyreval {
namespace {

enum class CharClass { kSpace, kNewline, kOpenParen, kCloseParen, kPunct, kWord };

bool is_apostrophe(UChar32 c) {
  return c == '\'' || c == 0x2019 || c == 0x2018 || c == 0x02BC;
}

bool is_joiner(UChar32 c) { return is_apostrophe(c) || c == '-' || c == 0x2010; }

CharClass classify(UChar32 c) {
  if (c == '\n') return CharClass::kNewline;
  if (c == '(') return CharClass::kOpenParen;
  if (c == ')') return CharClass::kCloseParen;
  if (u_isUWhiteSpace(c) || u_iscntrl(c)) return CharClass::kSpace;
  if (u_ispunct(c)) return CharClass::kPunct;
  return CharClass::kWord;
}

icu::UnicodeString decode_nfc(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  int32_t length = 0;
  u_strFromUTF8(nullptr, 0, &length, text.data(),
                static_cast<int32_t>(text.size()), &status);
  if (status != U_BUFFER_OVERFLOW_ERROR && U_FAILURE(status)) {
    throw Error(ErrorCode::kInvalidArgument, "text is not valid UTF-8");
  }
  icu::UnicodeString decoded = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  icu::UnicodeString out = nfc->normalize(decoded, status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::kInvalidArgument, "NFC normalization failed");
  }
  return out;
}

std::string to_utf8(const icu::UnicodeString& s) {
  std::string out;
  s.toUTF8String(out);
  return out;
}

// Byte-level balance check; parentheses are ASCII so offsets refer to the
// caller's original text.
void check_balanced(std::string_view text) {
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') {
      open.push_back(i);
    } else if (text[i] == ')') {
      if (open.empty()) throw UnbalancedParentheses(i);
      open.pop_back();
    }
  }
  if (!open.empty()) throw UnbalancedParentheses(open.front());
}

std::vector<Token> tokenize(std::string_view text) {
  const icu::UnicodeString ustr = decode_nfc(text);
  std::vector<UChar32> cps;
  cps.reserve(ustr.length());
  for (int32_t i = 0; i < ustr.length(); i = ustr.moveIndex32(i, 1)) {
    cps.push_back(ustr.char32At(i));
  }

  std::vector<Token> tokens;
  int depth = 0;
  int line = 0;

  auto emit_run = [&](std::size_t begin, std::size_t end, bool word) {
    icu::UnicodeString run;
    for (std::size_t k = begin; k < end; ++k) run.append(cps[k]);
    Token tok;
    tok.surface = to_utf8(run);
    tok.is_word = word;
    tok.is_backing = word && depth > 0;
    tok.line_index = line;
    if (word) tok.norm = normalize_word(tok.surface);
    tokens.push_back(std::move(tok));
  };
  auto emit_marker = [&](const char* surface) {
    Token tok;
    tok.surface = surface;
    tok.line_index = line;
    tokens.push_back(std::move(tok));
  };

  std::size_t i = 0;
  while (i < cps.size()) {
    const CharClass cls = classify(cps[i]);
    switch (cls) {
      case CharClass::kSpace:
        ++i;
        continue;
      case CharClass::kNewline:
        emit_marker("\n");
        ++line;
        ++i;
        continue;
      case CharClass::kOpenParen:
        emit_marker("(");
        ++depth;
        ++i;
        continue;
      case CharClass::kCloseParen:
        emit_marker(")");
        if (depth > 0) --depth;
        ++i;
        continue;
      default:
        break;
    }
    // Word or punctuation run. Joiners stay inside a word only when flanked
    // by word characters on both sides.
    auto wordish = [&](std::size_t k) {
      const CharClass c = classify(cps[k]);
      if (c == CharClass::kWord) return true;
      if (c == CharClass::kPunct && is_joiner(cps[k]) && k > 0 &&
          k + 1 < cps.size() && classify(cps[k - 1]) == CharClass::kWord &&
          classify(cps[k + 1]) == CharClass::kWord) {
        return true;
      }
      return false;
    };
    const bool word = wordish(i);
    std::size_t j = i + 1;
    while (j < cps.size()) {
      const CharClass c = classify(cps[j]);
      if (c != CharClass::kWord && c != CharClass::kPunct) break;
      if (wordish(j) != word) break;
      ++j;
    }
    emit_run(i, j, word);
    i = j;
  }
  return tokens;
}

}  // namespace

std::string normalize_word(std::string_view word) {
  icu::UnicodeString s = decode_nfc(word);
  s.foldCase(U_FOLD_CASE_DEFAULT);
  s.findAndReplace(icu::UnicodeString(static_cast<UChar32>(0x2019)), "'");
  s.findAndReplace(icu::UnicodeString(static_cast<UChar32>(0x2018)), "'");
  s.findAndReplace(icu::UnicodeString(static_cast<UChar32>(0x02BC)), "'");
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  s = nfc->normalize(s, status);
  return to_utf8(s);
}

std::vector<Token> tokenize_lyrics(const RawTranscript& raw) {
  check_balanced(raw.text);
  return tokenize(raw.text);
}

std::vector<Token> tokenize_lines(std::span<const std::string> lines,
                                  const std::string& language) {
  RawTranscript raw;
  raw.language = language;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) raw.text += '\n';
    for (char c : lines[i]) raw.text += (c == '\n' || c == '\r') ? ' ' : c;
  }
  return tokenize_lyrics(raw);
}

std::vector<Token> tokenize_hypothesis(std::string_view text) {
  return tokenize(text);
}

std::vector<Token> strip_nonwords(std::span<const Token> tokens) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) {
    if (t.is_word) out.push_back(t);
  }
  return out;
}

std::vector<Token> apply_nonlexical_annotations(
    std::vector<Token> tokens, const NonLexicalAnnotation& annotation) {
  std::map<int, std::vector<std::size_t>> words_by_line;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].is_word) words_by_line[tokens[i].line_index].push_back(i);
  }
  for (const auto& [line, word] : annotation.word_positions) {
    auto it = words_by_line.find(line);
    if (it == words_by_line.end() || word < 0 ||
        static_cast<std::size_t>(word) >= it->second.size()) {
      throw DanglingAnnotation(line, word);
    }
    tokens[it->second[static_cast<std::size_t>(word)]].is_nonlexical = true;
  }
  return tokens;
}

}  // namespace lyreval
