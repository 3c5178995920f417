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

#include "lyreval/adapter.h"

#include <cstdio>
#include <fstream>
#include <iterator>

#include "lyreval/error.h"
#include "lyreval/io.h"
#include "lyreval/subprocess.h"

namespace lyreval {

using nlohmann::json;

json to_json(const TranscribeRequest& request) {
  json j = {{"op", "transcribe"}, {"audio", request.audio.string()}};
  if (request.language) j["language"] = *request.language;
  if (request.segments) j["segments"] = segments_to_json(*request.segments);
  j["condition_on_previous"] = false;
  return j;
}

std::vector<std::string> parse_transcribe_response(
    const std::string& stdout_text, const TranscribeRequest& request) {
  std::vector<std::string> texts;
  try {
    const json j = json::parse(stdout_text);
    for (const json& t : j.at("texts")) texts.push_back(t.get<std::string>());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kProtocolError,
                std::string("malformed transcribe response: ") + e.what());
  }
  if (request.segments && texts.size() != request.segments->size()) {
    throw Error(ErrorCode::kProtocolError,
                "adapter returned " + std::to_string(texts.size()) +
                    " texts for " + std::to_string(request.segments->size()) +
                    " segments");
  }
  return texts;
}

json AdapterClient::call(const json& request) const {
  const ProcessResult r = run_process(command_, request.dump());
  if (r.exit_code != 0) throw AdapterFailure(r.exit_code, r.stderr_text);
  return json::parse(r.stdout_text, nullptr, /*allow_exceptions=*/false);
}

std::vector<std::string> AdapterClient::transcribe(
    const TranscribeRequest& request) const {
  const ProcessResult r = run_process(command_, to_json(request).dump());
  if (r.exit_code != 0) throw AdapterFailure(r.exit_code, r.stderr_text);
  return parse_transcribe_response(r.stdout_text, request);
}

std::filesystem::path AdapterClient::separate(
    const std::filesystem::path& audio, const std::string& model,
    const std::filesystem::path& out) const {
  const json response = call({{"op", "separate"},
                              {"audio", audio.string()},
                              {"model", model},
                              {"out", out.string()}});
  if (!response.is_object() || !response.contains("vocals") ||
      !response["vocals"].is_string()) {
    throw Error(ErrorCode::kProtocolError, "malformed separate response");
  }
  return response["vocals"].get<std::string>();
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

TranscriptCache::TranscriptCache(std::filesystem::path dir, CacheMode mode)
    : dir_(std::move(dir)), mode_(mode) {
  if (mode_ != CacheMode::kOff) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
  }
}

std::string TranscriptCache::audio_hash(const std::filesystem::path& audio) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = audio_hashes_.find(audio);
    if (it != audio_hashes_.end()) return it->second;
  }
  std::ifstream in(audio, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + audio.string());
  const std::string bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
  const std::string h = hex64(fnv1a64(bytes));
  std::lock_guard<std::mutex> lock(mutex_);
  audio_hashes_.emplace(audio, h);
  return h;
}

std::string TranscriptCache::key(const AdapterClient& adapter,
                                 const TranscribeRequest& request, int repeat) {
  const std::string segments =
      request.segments ? segments_to_json(*request.segments).dump() : "native";
  std::string material = audio_hash(request.audio);
  material += '\x1f' + hex64(fnv1a64(segments));
  material += '\x1f' + adapter.command();
  material += '\x1f' + request.language.value_or("");
  material += '\x1f' + std::to_string(repeat);
  return hex64(fnv1a64(material));
}

std::vector<std::string> TranscriptCache::transcribe(
    const AdapterClient& adapter, const TranscribeRequest& request, int repeat) {
  if (mode_ == CacheMode::kOff) return adapter.transcribe(request);

  const std::filesystem::path file = dir_ / (key(adapter, request, repeat) + ".json");
  if (std::filesystem::exists(file)) {
    const json j = read_json_file(file);
    return parse_transcribe_response(j.dump(), request);
  }
  if (mode_ == CacheMode::kReplay) {
    throw Error(ErrorCode::kIoError,
                "transcript cache miss for " + request.audio.string() +
                    " (repeat " + std::to_string(repeat) + ") in replay mode");
  }
  std::vector<std::string> texts = adapter.transcribe(request);
  // Write-then-rename so concurrent readers never see a partial file.
  const std::filesystem::path tmp =
      file.string() + ".tmp" + std::to_string(fnv1a64(request.audio.string()));
  write_json_file(tmp, json{{"texts", texts}});
  std::filesystem::rename(tmp, file);
  return texts;
}

}  // namespace lyreval
