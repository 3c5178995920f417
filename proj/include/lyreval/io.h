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
#include <string>
#include <vector>

#include <json.hpp>

#include "lyreval/metrics.h"
#include "lyreval/sampling.h"
#include "lyreval/text_norm.h"
#include "lyreval/timing_transfer.h"
#include "lyreval/vad.h"

namespace lyreval {

// Per-song lyrics file:
//   {"lines": [{"start": s, "end": s, "text": str}, ...],
//    "nonlexical": [[line_idx, word_idx], ...], "language": str}
struct LyricsFile {
  std::vector<Line> lines;
  std::vector<std::pair<int, int>> nonlexical;
  std::string language;

  std::vector<std::string> texts() const;
};

LyricsFile parse_lyrics(const nlohmann::json& j);
LyricsFile load_lyrics(const std::filesystem::path& path);
nlohmann::json lyrics_to_json(const LyricsFile& lyrics);

// Word tokens of the whole song with backing and non-lexical flags set.
std::vector<Token> reference_words(const LyricsFile& lyrics,
                                   const std::string& song_id = "");

nlohmann::json segments_to_json(const std::vector<Segment>& segments);
std::vector<Segment> segments_from_json(const nlohmann::json& j);

// Segment list plus "text" and "kind" ("merged" | "group").
nlohmann::json samples_to_json(const std::vector<Sample>& samples);

// Every field optional; missing fields keep their defaults.
VadConfig vad_config_from_json(const nlohmann::json& j);

std::vector<TimedWord> timed_words_from_json(const nlohmann::json& j);
nlohmann::json derived_lines_to_json(const std::vector<DerivedLine>& lines);

nlohmann::json counts_to_json(const EditCounts& c);
EditCounts counts_from_json(const nlohmann::json& j);
nlohmann::json percentages_to_json(const MetricPercentages& p);
MetricPercentages percentages_from_json(const nlohmann::json& j);

// Throws Error(kIoError) / Error(kProtocolError) for unreadable / malformed
// files.
nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace lyreval
