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

#include "lyreval/manifest.h"

#include <algorithm>
#include <set>

#include "lyreval/error.h"
#include "lyreval/io.h"

namespace lyreval {

bool is_audio_variant(const std::string& name) {
  return std::find(std::begin(kAudioVariants), std::end(kAudioVariants), name) !=
         std::end(kAudioVariants);
}

const std::filesystem::path& SongEntry::audio_path(
    const std::string& variant) const {
  auto it = audio.find(variant);
  if (it == audio.end()) throw MissingFile(id, variant, "(not in manifest)");
  return it->second;
}

DatasetManifest load_manifest(const std::filesystem::path& path,
                              const ManifestOptions& options) {
  const nlohmann::json j = read_json_file(path);
  const std::filesystem::path base = path.parent_path();
  auto resolve = [&](const std::string& p) {
    const std::filesystem::path candidate(p);
    return candidate.is_absolute() ? candidate : base / candidate;
  };

  DatasetManifest manifest;
  std::set<std::string> seen;
  try {
    for (const nlohmann::json& s : j.at("songs")) {
      SongEntry song;
      song.id = s.at("id").get<std::string>();
      song.language = s.value("language", "");
      song.lyrics_path = resolve(s.at("lyrics_path").get<std::string>());
      if (!seen.insert(song.id).second) {
        throw Error(ErrorCode::kDuplicateId, "song id '" + song.id + "'");
      }
      if (!std::filesystem::exists(song.lyrics_path)) {
        throw MissingFile(song.id, "lyrics", song.lyrics_path.string());
      }
      if (s.contains("audio")) {
        for (const auto& [variant, p] : s.at("audio").items()) {
          if (!is_audio_variant(variant)) {
            throw Error(ErrorCode::kInvalidArgument,
                        "song '" + song.id + "': unknown audio variant '" +
                            variant + "'");
          }
          const std::filesystem::path audio = resolve(p.get<std::string>());
          if (options.require_audio && !std::filesystem::exists(audio)) {
            throw MissingFile(song.id, variant, audio.string());
          }
          song.audio.emplace(variant, audio);
        }
      }
      manifest.songs.push_back(std::move(song));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kProtocolError,
                path.string() + ": malformed manifest: " + e.what());
  }
  return manifest;
}

}  // namespace lyreval
