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
#include <optional>
#include <string>
#include <vector>

#include "lyreval/adapter.h"
#include "lyreval/manifest.h"
#include "lyreval/metrics.h"
#include "lyreval/sampling.h"
#include "lyreval/vad.h"

namespace lyreval {

enum class Task { kShortForm, kLongForm };
enum class Segmenter { kNative, kRmsVad };

struct RunConfig {
  Task task = Task::kLongForm;
  std::string audio_variant = "mix";
  SampleKind sample_kind = SampleKind::kGroup;  // short-form only
  Segmenter segmenter = Segmenter::kRmsVad;     // long-form only
  // Audio the RMS-VAD boundaries are computed on; may differ from the audio
  // being transcribed.
  std::string vad_source_variant = "separated_mdx_extra";
  int repeats = 5;
  std::string adapter;  // shell command
  bool language_forcing = true;
  VadConfig vad;
  std::filesystem::path cache_dir;
  CacheMode cache_mode = CacheMode::kOff;
  std::size_t jobs = 1;

  // Throws Error(kInvalidArgument) for repeats < 1, jobs < 1 or unknown
  // variants.
  void validate() const;
};

// Short row label, e.g. "Group / Original Mix" or "Original Mix / RMS-VAD".
std::string describe(const RunConfig& cfg);
std::string audio_display_name(const std::string& variant);

struct SongResult {
  std::string id;
  std::string language;
  std::vector<EditCounts> per_repeat;
  std::size_t samples = 0;           // short-form samples evaluated
  std::size_t excluded_samples = 0;  // merged lines over the length limit
  std::size_t segments = 0;          // long-form RMS-VAD segments
  bool silent = false;               // VAD found no signal; scored as all deletions
};

struct RunResult {
  RunConfig config;
  std::vector<SongResult> songs;
  std::vector<EditCounts> repeat_totals;  // summed over songs
  std::vector<MetricsReport> per_repeat;
  MetricPercentages averaged;
  std::map<std::string, MetricPercentages> per_language;
  std::size_t excluded_samples = 0;
};

// Fills repeat_totals, per_repeat, averaged and per_language from songs.
// Dataset rates always come from summed counts, never from per-song rates.
void summarize(RunResult& result);

RunResult run_shortform(const DatasetManifest& manifest, const RunConfig& cfg);
RunResult run_longform(const DatasetManifest& manifest, const RunConfig& cfg);

// Dispatches on cfg.task.
RunResult run_experiment(const DatasetManifest& manifest, const RunConfig& cfg);

nlohmann::json run_result_to_json(const RunResult& result);
RunResult run_result_from_json(const nlohmann::json& j);

}  // namespace lyreval
