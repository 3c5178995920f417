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

#include "synthetic.h"

#include <cmath>
#include <numbers>
#include <random>

#include "lyreval/io.h"
#include "lyreval/wav.h"

namespace lyreval::testing {

namespace fs = std::filesystem;

fs::path bundled_synthetic_dir() { return LYREVAL_SYNTHETIC_DIR; }

fs::path materialize_synthetic_dataset(const fs::path& source, const fs::path& out,
                                       int sample_rate) {
  fs::create_directories(out);
  const nlohmann::json manifest = read_json_file(source / "manifest.json");
  fs::copy_file(source / "manifest.json", out / "manifest.json",
                fs::copy_options::overwrite_existing);

  std::uint32_t seed = 1;
  for (const nlohmann::json& song : manifest.at("songs")) {
    const std::string lyrics_name = song.at("lyrics_path").get<std::string>();
    fs::copy_file(source / lyrics_name, out / lyrics_name,
                  fs::copy_options::overwrite_existing);
    const LyricsFile lyrics = load_lyrics(source / lyrics_name);

    double duration = 0.0;
    for (const Line& l : lyrics.lines) duration = std::max(duration, l.end);
    duration += 3.0;
    const auto n = static_cast<std::size_t>(duration * sample_rate);

    std::vector<float> vocals(n, 0.0f);
    for (std::size_t k = 0; k < lyrics.lines.size(); ++k) {
      const Line& l = lyrics.lines[k];
      const double freq = 220.0 + 37.0 * static_cast<double>(k % 7);
      const auto first = static_cast<std::size_t>(l.start * sample_rate);
      const auto last = std::min(n, static_cast<std::size_t>(l.end * sample_rate));
      for (std::size_t i = first; i < last; ++i) {
        const double t = static_cast<double>(i) / sample_rate;
        vocals[i] += static_cast<float>(0.4 * std::sin(2.0 * std::numbers::pi * freq * t));
      }
    }

    for (const auto& [variant, rel] : song.at("audio").items()) {
      const double noise = variant == "stem" ? 0.0 : variant == "mix" ? 0.05 : 0.002;
      std::mt19937 rng(seed++);
      AudioBuffer audio;
      audio.sample_rate = sample_rate;
      audio.samples.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        // Raw engine output keeps the noise identical across standard libraries.
        const double u = static_cast<double>(rng()) / 4294967295.0 * 2.0 - 1.0;
        audio.samples[i] = static_cast<float>(vocals[i] + noise * u);
      }
      const fs::path path = out / rel.get<std::string>();
      fs::create_directories(path.parent_path());
      write_wav(path, audio, WavEncoding::kPcm16);
    }
  }
  return out / "manifest.json";
}

}  // namespace lyreval::testing
