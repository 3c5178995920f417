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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lyreval {

enum class ErrorCode {
  kInvalidArgument,
  kUnbalancedParentheses,
  kDanglingAnnotation,
  kEmptyReference,
  kEmptyInput,
  kAudioTooShort,
  kSilentSignal,
  kUnsplittableRegion,
  kInfeasiblePartition,
  kUnsupportedFormat,
  kIoError,
  kMissingFile,
  kDuplicateId,
  kAdapterFailure,
  kProtocolError,
};

const char* error_code_name(ErrorCode code);

// Base of every error raised by the library. The code is stable and is what
// tests and callers should branch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class UnbalancedParentheses : public Error {
 public:
  // `position` is the byte offset of the offending parenthesis.
  explicit UnbalancedParentheses(std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class DanglingAnnotation : public Error {
 public:
  DanglingAnnotation(int line_index, int word_index);
  int line_index() const { return line_index_; }
  int word_index() const { return word_index_; }

 private:
  int line_index_;
  int word_index_;
};

class MissingFile : public Error {
 public:
  MissingFile(const std::string& song, const std::string& variant,
              const std::string& path);
  const std::string& song() const { return song_; }
  const std::string& variant() const { return variant_; }

 private:
  std::string song_;
  std::string variant_;
};

class AdapterFailure : public Error {
 public:
  AdapterFailure(int exit_code, const std::string& stderr_text);
  int exit_code() const { return exit_code_; }
  const std::string& stderr_text() const { return stderr_text_; }

 private:
  int exit_code_;
  std::string stderr_text_;
};

}  // namespace lyreval
