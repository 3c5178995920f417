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

#include "lyreval/report.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "lyreval/io.h"

namespace lyreval {
namespace {

constexpr const char* kMetricHeader = "WER | SR | DR | IR | IR10 | DR_NL | DR_BV";

std::string metric_cells(const MetricPercentages& p) {
  std::string out;
  for (double v : {p.wer, p.sr, p.dr, p.ir, p.ir10, p.dr_nl, p.dr_bv}) {
    out += " " + format_percent(v) + " |";
  }
  return out;
}

std::string setup_name(const RunConfig& cfg) {
  if (cfg.task == Task::kShortForm) {
    return cfg.sample_kind == SampleKind::kGroup ? "Group" : "Merged Line";
  }
  return cfg.segmenter == Segmenter::kNative ? "Native" : "RMS-VAD";
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

std::string metric_table(std::span<const RunResult> results, bool short_form) {
  std::ostringstream os;
  os << (short_form ? "| Type | Audio | " : "| Audio | Algorithm | ") << kMetricHeader
     << " |\n";
  os << "|---|---|---:|---:|---:|---:|---:|---:|---:|\n";
  for (const RunResult& r : results) {
    const std::string audio = audio_display_name(r.config.audio_variant);
    const std::string setup = setup_name(r.config);
    os << "| " << (short_form ? setup : audio) << " | "
       << (short_form ? audio : setup) << " |" << metric_cells(r.averaged) << "\n";
  }
  return os.str();
}

std::string language_table(std::span<const RunResult> results) {
  std::set<std::string> languages;
  for (const RunResult& r : results) {
    for (const auto& [lang, p] : r.per_language) languages.insert(lang);
  }
  std::ostringstream os;
  os << "| Audio | Setup |";
  for (const std::string& lang : languages) os << ' ' << upper(lang) << " |";
  os << "\n|---|---|";
  for (std::size_t i = 0; i < languages.size(); ++i) os << "---:|";
  os << '\n';
  for (const RunResult& r : results) {
    os << "| " << audio_display_name(r.config.audio_variant) << " | "
       << setup_name(r.config) << " |";
    for (const std::string& lang : languages) {
      auto it = r.per_language.find(lang);
      os << ' ' << (it == r.per_language.end() ? "-" : format_percent(it->second.wer))
         << " |";
    }
    os << '\n';
  }
  return os.str();
}

std::string per_song_csv(std::span<const RunResult> results) {
  std::ostringstream os;
  os << "run,task,audio,setup,repeat,song,language,H,S,D,I,I10,D_NL,D_BV,N,WER\n";
  for (const RunResult& r : results) {
    const std::string label = describe(r.config);
    for (const SongResult& s : r.songs) {
      for (std::size_t k = 0; k < s.per_repeat.size(); ++k) {
        const EditCounts& c = s.per_repeat[k];
        os << '"' << label << "\","
           << (r.config.task == Task::kShortForm ? "short" : "long") << ','
           << r.config.audio_variant << ',' << setup_name(r.config) << ',' << k
           << ',' << s.id << ',' << s.language << ',' << c.hits << ','
           << c.substitutions << ',' << c.deletions << ',' << c.insertions << ','
           << c.insertions_in_runs << ',' << c.deletions_nonlexical << ','
           << c.deletions_backing << ',' << c.reference_words() << ',';
        if (c.reference_words() > 0) {
          os << format_percent(compute_rates(c).wer.percent());
        }
        os << '\n';
      }
    }
  }
  return os.str();
}

}  // namespace

std::string render_report(std::span<const RunResult> results, ReportLayout layout) {
  switch (layout) {
    case ReportLayout::kShortTable: return metric_table(results, true);
    case ReportLayout::kLongTable: return metric_table(results, false);
    case ReportLayout::kLanguageTable: return language_table(results);
    case ReportLayout::kPerSongCsv: return per_song_csv(results);
  }
  return {};
}

void emit_report(std::span<const RunResult> results, ReportLayout layout,
                 const std::filesystem::path& out) {
  write_text_file(out, render_report(results, layout));
}

}  // namespace lyreval
