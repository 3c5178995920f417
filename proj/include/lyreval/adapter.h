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

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lyreval/vad.h"

namespace lyreval {

// Client side of the adapter wire protocol: one JSON document on the
// adapter's standard input, one on its standard output.
//
//   {"op":"transcribe","audio":p,"language":"en","segments":[...],
//    "condition_on_previous":false}          -> {"texts":[...]}
//   {"op":"separate","audio":p,"model":"mdx","out":p} -> {"vocals":p}
//
// "language" is omitted when not forcing; "segments" is omitted to request
// the transcriber's own long-form segmentation.
struct TranscribeRequest {
  std::filesystem::path audio;
  std::optional<std::string> language;
  std::optional<std::vector<Segment>> segments;
};

nlohmann::json to_json(const TranscribeRequest& request);

// Throws Error(kProtocolError) on a malformed response or, when segments
// were sent, a texts array of the wrong length.
std::vector<std::string> parse_transcribe_response(
    const std::string& stdout_text, const TranscribeRequest& request);

class AdapterClient {
 public:
  explicit AdapterClient(std::string command) : command_(std::move(command)) {}

  const std::string& command() const { return command_; }

  // Throws AdapterFailure on a non-zero exit and Error(kProtocolError) on a
  // malformed response.
  std::vector<std::string> transcribe(const TranscribeRequest& request) const;

  // Returns the path of the separated vocals written by the adapter.
  std::filesystem::path separate(const std::filesystem::path& audio,
                                 const std::string& model,
                                 const std::filesystem::path& out) const;

 private:
  nlohmann::json call(const nlohmann::json& request) const;

  std::string command_;
};

// 64-bit FNV-1a; stable across platforms, used only for cache keys.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

enum class CacheMode {
  kOff,
  kReadWrite,
  kReplay,  // never call the adapter; a miss is an error
};

// Transcript store keyed by (audio content hash, segment list, adapter
// command, language, repeat index). Lets metric code be rerun without
// inference. Safe to share between threads.
class TranscriptCache {
 public:
  TranscriptCache(std::filesystem::path dir, CacheMode mode);

  CacheMode mode() const { return mode_; }

  std::vector<std::string> transcribe(const AdapterClient& adapter,
                                      const TranscribeRequest& request,
                                      int repeat);

  std::string key(const AdapterClient& adapter, const TranscribeRequest& request,
                  int repeat);

 private:
  std::string audio_hash(const std::filesystem::path& audio);

  std::filesystem::path dir_;
  CacheMode mode_;
  std::mutex mutex_;
  std::map<std::filesystem::path, std::string> audio_hashes_;
};

}  // namespace lyreval
