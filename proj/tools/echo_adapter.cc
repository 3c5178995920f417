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

// echo_adapter: a stand-in transcriber/separator speaking the adapter wire
// protocol. It "transcribes" by looking up the reference lyrics of the song
// whose audio is requested, so a pipeline driven by it must score WER 0.
//
//   echo_adapter --manifest m.json [--mode echo|empty]
//
// transcribe with segments: texts[i] holds the lines whose midpoint lies in
// segments[i], in file order. Without segments: one text per line.
// separate: copies the input audio to the requested path.

#include <filesystem>
#include <iostream>
#include <iterator>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lyreval/error.h"
#include "lyreval/io.h"
#include "lyreval/manifest.h"
#include "lyreval/wav.h"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace lyreval;

int main(int argc, char** argv) {
  CLI::App app{"Reference-echo adapter for pipeline tests"};
  std::string manifest_path, mode = "echo";
  app.add_option("--manifest", manifest_path, "Dataset manifest")->required();
  app.add_option("--mode", mode, "echo|empty")->check(CLI::IsMember({"echo", "empty"}));
  CLI11_PARSE(app, argc, argv);

  try {
    const std::string input((std::istreambuf_iterator<char>(std::cin)),
                            std::istreambuf_iterator<char>());
    const json request = json::parse(input);
    const std::string op = request.at("op").get<std::string>();

    if (op == "separate") {
      const std::string out = request.at("out").get<std::string>();
      write_wav(out, load_audio(request.at("audio").get<std::string>()));
      std::cout << json{{"vocals", out}}.dump() << '\n';
      return 0;
    }
    if (op != "transcribe") {
      std::cerr << "echo_adapter: unknown op '" << op << "'\n";
      return 2;
    }

    const DatasetManifest manifest =
        load_manifest(manifest_path, ManifestOptions{.require_audio = false});
    const fs::path audio = fs::weakly_canonical(request.at("audio").get<std::string>());
    const SongEntry* song = nullptr;
    for (const SongEntry& s : manifest.songs) {
      for (const auto& [variant, p] : s.audio) {
        if (fs::weakly_canonical(p) == audio) song = &s;
      }
    }
    if (song == nullptr) {
      std::cerr << "echo_adapter: no song uses " << audio << '\n';
      return 3;
    }
    const LyricsFile lyrics = load_lyrics(song->lyrics_path);

    json texts = json::array();
    if (request.contains("segments")) {
      for (const json& seg : request.at("segments")) {
        const double start = seg.at("start").get<double>();
        const double end = seg.at("end").get<double>();
        std::string text;
        for (const Line& line : lyrics.lines) {
          const double mid = 0.5 * (line.start + line.end);
          if (mid >= start && mid < end) {
            if (!text.empty()) text += '\n';
            text += line.text;
          }
        }
        texts.push_back(mode == "empty" ? "" : text);
      }
    } else {
      for (const Line& line : lyrics.lines) {
        texts.push_back(mode == "empty" ? "" : line.text);
      }
    }
    std::cout << json{{"texts", texts}}.dump() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "echo_adapter: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
