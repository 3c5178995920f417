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

#include "lyreval/io.h"

#include <fstream>
#include <sstream>

#include "lyreval/error.h"

namespace lyreval {

using nlohmann::json;

std::vector<std::string> LyricsFile::texts() const {
  std::vector<std::string> out;
  out.reserve(lines.size());
  for (const Line& l : lines) out.push_back(l.text);
  return out;
}

LyricsFile parse_lyrics(const json& j) {
  try {
    LyricsFile out;
    for (const json& l : j.at("lines")) {
      Line line{l.at("start").get<double>(), l.at("end").get<double>(),
                l.at("text").get<std::string>()};
      if (!(line.start < line.end)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "line '" + line.text + "' has start >= end");
      }
      out.lines.push_back(std::move(line));
    }
    if (j.contains("nonlexical")) {
      for (const json& p : j.at("nonlexical")) {
        out.nonlexical.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
      }
    }
    out.language = j.value("language", "");
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kProtocolError,
                std::string("malformed lyrics file: ") + e.what());
  }
}

LyricsFile load_lyrics(const std::filesystem::path& path) {
  return parse_lyrics(read_json_file(path));
}

json lyrics_to_json(const LyricsFile& lyrics) {
  json lines = json::array();
  for (const Line& l : lyrics.lines) {
    lines.push_back({{"start", l.start}, {"end", l.end}, {"text", l.text}});
  }
  json nonlexical = json::array();
  for (const auto& [line, word] : lyrics.nonlexical) {
    nonlexical.push_back({line, word});
  }
  return {{"lines", lines}, {"nonlexical", nonlexical},
          {"language", lyrics.language}};
}

std::vector<Token> reference_words(const LyricsFile& lyrics,
                                   const std::string& song_id) {
  const std::vector<std::string> texts = lyrics.texts();
  NonLexicalAnnotation annotation{song_id, lyrics.nonlexical};
  return strip_nonwords(apply_nonlexical_annotations(
      tokenize_lines(texts, lyrics.language), annotation));
}

json segments_to_json(const std::vector<Segment>& segments) {
  json out = json::array();
  for (const Segment& s : segments) {
    out.push_back({{"start", s.start}, {"end", s.end}});
  }
  return out;
}

std::vector<Segment> segments_from_json(const json& j) {
  try {
    std::vector<Segment> out;
    for (const json& s : j) {
      out.push_back({s.at("start").get<double>(), s.at("end").get<double>()});
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kProtocolError,
                std::string("malformed segment list: ") + e.what());
  }
}

json samples_to_json(const std::vector<Sample>& samples) {
  json out = json::array();
  for (const Sample& s : samples) {
    out.push_back({{"start", s.start},
                   {"end", s.end},
                   {"text", s.text},
                   {"kind", s.kind == SampleKind::kGroup ? "group" : "merged"}});
  }
  return out;
}

VadConfig vad_config_from_json(const json& j) {
  VadConfig cfg;
  try {
    cfg.onset = j.value("onset", cfg.onset);
    cfg.offset = j.value("offset", cfg.offset);
    cfg.min_silence = j.value("min_silence", cfg.min_silence);
    cfg.max_len = j.value("max_len", cfg.max_len);
    cfg.frame_size = j.value("frame_size", cfg.frame_size);
    cfg.hop = j.value("hop", cfg.hop);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("malformed VAD config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

std::vector<TimedWord> timed_words_from_json(const json& j) {
  try {
    std::vector<TimedWord> out;
    for (const json& w : j) {
      out.push_back({w.at("text").get<std::string>(), w.at("start").get<double>(),
                     w.at("end").get<double>()});
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kProtocolError,
                std::string("malformed timed words: ") + e.what());
  }
}

json derived_lines_to_json(const std::vector<DerivedLine>& lines) {
  json out = json::array();
  for (const DerivedLine& l : lines) {
    json entry = {{"text", l.text}, {"ambiguous", l.ambiguous}};
    entry["start"] = l.start ? json(*l.start) : json(nullptr);
    entry["end"] = l.end ? json(*l.end) : json(nullptr);
    out.push_back(std::move(entry));
  }
  return out;
}

json counts_to_json(const EditCounts& c) {
  return {{"H", c.hits},         {"S", c.substitutions},
          {"D", c.deletions},    {"I", c.insertions},
          {"I10", c.insertions_in_runs}, {"D_NL", c.deletions_nonlexical},
          {"D_BV", c.deletions_backing}};
}

EditCounts counts_from_json(const json& j) {
  EditCounts c;
  c.hits = j.at("H").get<std::int64_t>();
  c.substitutions = j.at("S").get<std::int64_t>();
  c.deletions = j.at("D").get<std::int64_t>();
  c.insertions = j.at("I").get<std::int64_t>();
  c.insertions_in_runs = j.at("I10").get<std::int64_t>();
  c.deletions_nonlexical = j.at("D_NL").get<std::int64_t>();
  c.deletions_backing = j.at("D_BV").get<std::int64_t>();
  return c;
}

json percentages_to_json(const MetricPercentages& p) {
  return {{"WER", p.wer},   {"SR", p.sr},       {"DR", p.dr},     {"IR", p.ir},
          {"IR10", p.ir10}, {"DR_NL", p.dr_nl}, {"DR_BV", p.dr_bv}};
}

MetricPercentages percentages_from_json(const json& j) {
  return {j.at("WER").get<double>(),  j.at("SR").get<double>(),
          j.at("DR").get<double>(),   j.at("IR").get<double>(),
          j.at("IR10").get<double>(), j.at("DR_NL").get<double>(),
          j.at("DR_BV").get<double>()};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kProtocolError,
                path.string() + ": invalid JSON: " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "short write to " + path.string());
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

}  // namespace lyreval
