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

#include "lyreval/error.h"

namespace lyreval {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kUnbalancedParentheses: return "UnbalancedParentheses";
    case ErrorCode::kDanglingAnnotation: return "DanglingAnnotation";
    case ErrorCode::kEmptyReference: return "EmptyReference";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kAudioTooShort: return "AudioTooShort";
    case ErrorCode::kSilentSignal: return "SilentSignal";
    case ErrorCode::kUnsplittableRegion: return "UnsplittableRegion";
    case ErrorCode::kInfeasiblePartition: return "InfeasiblePartition";
    case ErrorCode::kUnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kMissingFile: return "MissingFile";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kAdapterFailure: return "AdapterFailure";
    case ErrorCode::kProtocolError: return "ProtocolError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

UnbalancedParentheses::UnbalancedParentheses(std::size_t position)
    : Error(ErrorCode::kUnbalancedParentheses,
            "unmatched parenthesis at byte " + std::to_string(position)),
      position_(position) {}

DanglingAnnotation::DanglingAnnotation(int line_index, int word_index)
    : Error(ErrorCode::kDanglingAnnotation,
            "no word " + std::to_string(word_index) + " on line " +
                std::to_string(line_index)),
      line_index_(line_index),
      word_index_(word_index) {}

MissingFile::MissingFile(const std::string& song, const std::string& variant,
                         const std::string& path)
    : Error(ErrorCode::kMissingFile,
            "song '" + song + "' variant '" + variant + "': " + path),
      song_(song),
      variant_(variant) {}

AdapterFailure::AdapterFailure(int exit_code, const std::string& stderr_text)
    : Error(ErrorCode::kAdapterFailure,
            "adapter exited with code " + std::to_string(exit_code) +
                (stderr_text.empty() ? "" : ": " + stderr_text)),
      exit_code_(exit_code),
      stderr_text_(stderr_text) {}

}  // namespace lyreval
