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

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace lyreval {

// Audio variants a manifest may list for a song.
inline constexpr const char* kAudioVariants[] = {"mix", "separated_mdx",
                                                 "separated_mdx_extra", "stem"};

bool is_audio_variant(const std::string& name);

struct SongEntry {
  std::string id;
  std::string language;
  std::filesystem::path lyrics_path;
  std::map<std::string, std::filesystem::path> audio;  // variant -> path

  // Throws MissingFile if the song has no such variant.
  const std::filesystem::path& audio_path(const std::string& variant) const;
};

struct DatasetManifest {
  std::vector<SongEntry> songs;
};

struct ManifestOptions {
  // Lyrics-only consumers (sampling statistics) can skip audio checks.
  bool require_audio = true;
};

// {"songs": [{"id", "language", "lyrics_path", "audio": {variant: path}}]}
// Relative paths are resolved against the manifest's directory. Throws
// MissingFile(song, variant) for absent files, Error(kDuplicateId) for a
// repeated id and Error(kInvalidArgument) for an unknown variant.
DatasetManifest load_manifest(const std::filesystem::path& path,
                              const ManifestOptions& options = {});

}  // namespace lyreval
