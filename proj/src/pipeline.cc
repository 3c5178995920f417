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

#include "lyreval/pipeline.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <thread>

#include "lyreval/align.h"
#include "lyreval/error.h"
#include "lyreval/io.h"
#include "lyreval/text_norm.h"
#include "lyreval/wav.h"

namespace lyreval {

using nlohmann::json;

void RunConfig::validate() const {
  if (repeats < 1) throw Error(ErrorCode::kInvalidArgument, "repeats must be >= 1");
  if (jobs < 1) throw Error(ErrorCode::kInvalidArgument, "jobs must be >= 1");
  if (!is_audio_variant(audio_variant)) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown audio variant '" + audio_variant + "'");
  }
  if (task == Task::kLongForm && segmenter == Segmenter::kRmsVad &&
      !is_audio_variant(vad_source_variant)) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown VAD source variant '" + vad_source_variant + "'");
  }
  if (adapter.empty() && cache_mode != CacheMode::kReplay) {
    throw Error(ErrorCode::kInvalidArgument, "no adapter command configured");
  }
  vad.validate();
}

std::string audio_display_name(const std::string& variant) {
  if (variant == "mix") return "Original Mix";
  if (variant == "separated_mdx") return "Separated (mdx)";
  if (variant == "separated_mdx_extra") return "Separated (mdx_extra)";
  if (variant == "stem") return "Vocal Stem";
  return variant;
}

std::string describe(const RunConfig& cfg) {
  if (cfg.task == Task::kShortForm) {
    return std::string(cfg.sample_kind == SampleKind::kGroup ? "Group" : "Merged Line") +
           " / " + audio_display_name(cfg.audio_variant);
  }
  return audio_display_name(cfg.audio_variant) + " / " +
         (cfg.segmenter == Segmenter::kNative ? "Native" : "RMS-VAD");
}

namespace {

// Runs fn(i) for i in [0, n) on up to `jobs` threads. The first exception
// (lowest index) is rethrown after all workers finish.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t jobs, Fn fn) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min(jobs, n);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::optional<std::string> forced_language(const RunConfig& cfg,
                                           const SongEntry& song,
                                           const LyricsFile& lyrics) {
  if (!cfg.language_forcing) return std::nullopt;
  const std::string& lang = song.language.empty() ? lyrics.language : song.language;
  if (lang.empty()) return std::nullopt;
  return lang;
}

EditCounts score(std::span<const Token> ref, const std::string& hypothesis) {
  const std::vector<Token> hyp = strip_nonwords(tokenize_hypothesis(hypothesis));
  return count_edits(align(ref, hyp), ref);
}

std::string join_lines(const std::vector<std::string>& texts) {
  std::string out;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    if (i > 0) out += '\n';
    out += texts[i];
  }
  return out;
}

SongResult shortform_song(const SongEntry& song, const RunConfig& cfg,
                          const AdapterClient& adapter, TranscriptCache& cache) {
  const LyricsFile lyrics = load_lyrics(song.lyrics_path);
  const std::vector<Token> words = reference_words(lyrics, song.id);

  SongResult result;
  result.id = song.id;
  result.language = song.language.empty() ? lyrics.language : song.language;

  std::vector<Sample> samples;
  if (cfg.sample_kind == SampleKind::kMergedLine) {
    MergeResult merged = merge_overlapping_lines(lyrics.lines);
    samples = std::move(merged.samples);
    result.excluded_samples = merged.excluded;
  } else {
    GroupResult grouped = group_lines(lyrics.lines);
    samples = std::move(grouped.groups);
    result.excluded_samples = grouped.excluded;
  }
  result.samples = samples.size();

  std::vector<std::vector<Token>> refs(samples.size());
  std::vector<Segment> windows;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const std::set<std::size_t> lines(samples[i].source_lines.begin(),
                                      samples[i].source_lines.end());
    for (const Token& w : words) {
      if (lines.count(static_cast<std::size_t>(w.line_index))) refs[i].push_back(w);
    }
    windows.push_back({samples[i].start, samples[i].end});
  }

  TranscribeRequest request;
  request.audio = song.audio_path(cfg.audio_variant);
  request.language = forced_language(cfg, song, lyrics);
  request.segments = windows;

  for (int r = 0; r < cfg.repeats; ++r) {
    EditCounts counts;
    if (!samples.empty()) {
      const std::vector<std::string> texts = cache.transcribe(adapter, request, r);
      for (std::size_t i = 0; i < samples.size(); ++i) {
        counts += score(refs[i], texts[i]);
      }
    }
    result.per_repeat.push_back(counts);
  }
  return result;
}

SongResult longform_song(const SongEntry& song, const RunConfig& cfg,
                         const AdapterClient& adapter, TranscriptCache& cache) {
  const LyricsFile lyrics = load_lyrics(song.lyrics_path);
  const std::vector<Token> ref = reference_words(lyrics, song.id);

  SongResult result;
  result.id = song.id;
  result.language = song.language.empty() ? lyrics.language : song.language;

  TranscribeRequest request;
  request.audio = song.audio_path(cfg.audio_variant);
  request.language = forced_language(cfg, song, lyrics);
  if (cfg.segmenter == Segmenter::kRmsVad) {
    const AudioBuffer vocals = load_audio(song.audio_path(cfg.vad_source_variant));
    try {
      request.segments = rms_vad(vocals, cfg.vad);
      result.segments = request.segments->size();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSilentSignal) throw;
      result.silent = true;
    }
  }

  for (int r = 0; r < cfg.repeats; ++r) {
    std::string hypothesis;
    const bool nothing_to_transcribe =
        result.silent || (request.segments && request.segments->empty());
    if (!nothing_to_transcribe) {
      hypothesis = join_lines(cache.transcribe(adapter, request, r));
    }
    result.per_repeat.push_back(score(ref, hypothesis));
  }
  return result;
}

template <typename SongFn>
RunResult run_songs(const DatasetManifest& manifest, const RunConfig& cfg,
                    SongFn song_fn) {
  cfg.validate();
  const AdapterClient adapter(cfg.adapter);
  TranscriptCache cache(cfg.cache_dir, cfg.cache_mode);
  RunResult result;
  result.config = cfg;
  result.songs.resize(manifest.songs.size());
  parallel_for(manifest.songs.size(), cfg.jobs, [&](std::size_t i) {
    result.songs[i] = song_fn(manifest.songs[i], cfg, adapter, cache);
  });
  summarize(result);
  return result;
}

}  // namespace

void summarize(RunResult& result) {
  const auto repeats = static_cast<std::size_t>(result.config.repeats);
  result.repeat_totals.assign(repeats, EditCounts{});
  result.per_repeat.clear();
  result.per_language.clear();
  result.excluded_samples = 0;

  std::map<std::string, std::vector<EditCounts>> by_language;
  for (const SongResult& song : result.songs) {
    if (song.per_repeat.size() != repeats) {
      throw Error(ErrorCode::kInvalidArgument,
                  "song '" + song.id + "' has " +
                      std::to_string(song.per_repeat.size()) + " repeats, expected " +
                      std::to_string(repeats));
    }
    result.excluded_samples += song.excluded_samples;
    auto& lang = by_language[song.language];
    lang.resize(repeats);
    for (std::size_t r = 0; r < repeats; ++r) {
      result.repeat_totals[r] += song.per_repeat[r];
      lang[r] += song.per_repeat[r];
    }
  }
  for (const EditCounts& total : result.repeat_totals) {
    result.per_repeat.push_back(compute_rates(total));
  }
  result.averaged = average_runs(result.per_repeat);
  for (const auto& [language, totals] : by_language) {
    if (totals.empty() || totals.front().reference_words() == 0) continue;
    std::vector<MetricsReport> reports;
    for (const EditCounts& t : totals) reports.push_back(compute_rates(t));
    result.per_language[language] = average_runs(reports);
  }
}

RunResult run_shortform(const DatasetManifest& manifest, const RunConfig& cfg) {
  if (cfg.task != Task::kShortForm) {
    throw Error(ErrorCode::kInvalidArgument, "run_shortform needs a short-form config");
  }
  return run_songs(manifest, cfg, shortform_song);
}

RunResult run_longform(const DatasetManifest& manifest, const RunConfig& cfg) {
  if (cfg.task != Task::kLongForm) {
    throw Error(ErrorCode::kInvalidArgument, "run_longform needs a long-form config");
  }
  return run_songs(manifest, cfg, longform_song);
}

RunResult run_experiment(const DatasetManifest& manifest, const RunConfig& cfg) {
  return cfg.task == Task::kShortForm ? run_shortform(manifest, cfg)
                                      : run_longform(manifest, cfg);
}

json run_result_to_json(const RunResult& result) {
  const RunConfig& c = result.config;
  json config = {
      {"task", c.task == Task::kShortForm ? "short" : "long"},
      {"variant", c.audio_variant},
      {"kind", c.sample_kind == SampleKind::kGroup ? "group" : "merged"},
      {"segmenter", c.segmenter == Segmenter::kNative ? "native" : "rms-vad"},
      {"vad_variant", c.vad_source_variant},
      {"repeats", c.repeats},
      {"adapter", c.adapter},
      {"language_forcing", c.language_forcing},
      {"vad",
       {{"onset", c.vad.onset},
        {"offset", c.vad.offset},
        {"min_silence", c.vad.min_silence},
        {"max_len", c.vad.max_len},
        {"frame_size", c.vad.frame_size},
        {"hop", c.vad.hop}}},
      {"label", describe(c)}};

  json songs = json::array();
  for (const SongResult& s : result.songs) {
    json repeats = json::array();
    for (const EditCounts& counts : s.per_repeat) {
      json entry = {{"counts", counts_to_json(counts)}};
      entry["rates"] = counts.reference_words() > 0
                           ? percentages_to_json(to_percentages(compute_rates(counts)))
                           : json(nullptr);
      repeats.push_back(std::move(entry));
    }
    songs.push_back({{"id", s.id},
                     {"language", s.language},
                     {"samples", s.samples},
                     {"excluded_samples", s.excluded_samples},
                     {"segments", s.segments},
                     {"silent", s.silent},
                     {"repeats", repeats}});
  }

  json repeats = json::array();
  for (std::size_t r = 0; r < result.per_repeat.size(); ++r) {
    repeats.push_back({{"counts", counts_to_json(result.repeat_totals[r])},
                       {"rates", percentages_to_json(to_percentages(result.per_repeat[r]))}});
  }
  json languages = json::object();
  for (const auto& [lang, p] : result.per_language) {
    languages[lang] = percentages_to_json(p);
  }
  return {{"config", config},
          {"songs", songs},
          {"repeats", repeats},
          {"averaged", percentages_to_json(result.averaged)},
          {"per_language", languages},
          {"excluded_samples", result.excluded_samples}};
}

RunResult run_result_from_json(const json& j) {
  try {
    RunResult result;
    const json& c = j.at("config");
    RunConfig& cfg = result.config;
    cfg.task = c.at("task").get<std::string>() == "short" ? Task::kShortForm
                                                         : Task::kLongForm;
    cfg.audio_variant = c.at("variant").get<std::string>();
    cfg.sample_kind = c.at("kind").get<std::string>() == "group"
                          ? SampleKind::kGroup
                          : SampleKind::kMergedLine;
    cfg.segmenter = c.at("segmenter").get<std::string>() == "native"
                        ? Segmenter::kNative
                        : Segmenter::kRmsVad;
    cfg.vad_source_variant = c.at("vad_variant").get<std::string>();
    cfg.repeats = c.at("repeats").get<int>();
    cfg.adapter = c.at("adapter").get<std::string>();
    cfg.language_forcing = c.at("language_forcing").get<bool>();
    if (c.contains("vad")) cfg.vad = vad_config_from_json(c.at("vad"));

    for (const json& s : j.at("songs")) {
      SongResult song;
      song.id = s.at("id").get<std::string>();
      song.language = s.at("language").get<std::string>();
      song.samples = s.value("samples", std::size_t{0});
      song.excluded_samples = s.value("excluded_samples", std::size_t{0});
      song.segments = s.value("segments", std::size_t{0});
      song.silent = s.value("silent", false);
      for (const json& r : s.at("repeats")) {
        song.per_repeat.push_back(counts_from_json(r.at("counts")));
      }
      result.songs.push_back(std::move(song));
    }
    summarize(result);
    return result;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kProtocolError,
                std::string("malformed run result: ") + e.what());
  }
}

}  // namespace lyreval
