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

#include <fstream>

#include <gtest/gtest.h>

#include "lyreval/error.h"
#include "lyreval/io.h"
#include "support/fixtures.h"
#include "support/synthetic.h"

namespace lyreval {
namespace {

using nlohmann::json;
using testing::TempDir;

void touch(const std::filesystem::path& p) {
  std::filesystem::create_directories(p.parent_path());
  std::ofstream(p) << "x";
}

json song(const std::string& id) {
  return {{"id", id},
          {"language", "en"},
          {"lyrics_path", id + ".json"},
          {"audio", {{"mix", "audio/" + id + ".wav"}}}};
}

TEST(Manifest, ResolvesRelativePaths) {
  TempDir dir;
  touch(dir / "a.json");
  touch(dir / "audio/a.wav");
  write_json_file(dir / "m.json", {{"songs", {song("a")}}});
  const DatasetManifest m = load_manifest(dir / "m.json");
  ASSERT_EQ(m.songs.size(), 1u);
  EXPECT_EQ(m.songs[0].lyrics_path, dir.path() / "a.json");
  EXPECT_EQ(m.songs[0].audio_path("mix"), dir.path() / "audio/a.wav");
  EXPECT_EQ(m.songs[0].language, "en");
}

TEST(Manifest, DuplicateId) {
  TempDir dir;
  touch(dir / "a.json");
  touch(dir / "audio/a.wav");
  write_json_file(dir / "m.json", {{"songs", {song("a"), song("a")}}});
  try {
    load_manifest(dir / "m.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicateId);
  }
}

TEST(Manifest, MissingAudioFile) {
  TempDir dir;
  touch(dir / "a.json");
  write_json_file(dir / "m.json", {{"songs", {song("a")}}});
  try {
    load_manifest(dir / "m.json");
    FAIL();
  } catch (const MissingFile& e) {
    EXPECT_EQ(e.song(), "a");
    EXPECT_EQ(e.variant(), "mix");
  }
  EXPECT_NO_THROW(load_manifest(dir / "m.json", {.require_audio = false}));
}

TEST(Manifest, MissingLyricsAndUnknownVariant) {
  TempDir dir;
  touch(dir / "audio/a.wav");
  write_json_file(dir / "m.json", {{"songs", {song("a")}}});
  try {
    load_manifest(dir / "m.json");
    FAIL();
  } catch (const MissingFile& e) {
    EXPECT_EQ(e.variant(), "lyrics");
  }
  touch(dir / "a.json");
  json bad = song("a");
  bad["audio"]["karaoke"] = "audio/a.wav";
  write_json_file(dir / "m.json", {{"songs", {bad}}});
  EXPECT_THROW(load_manifest(dir / "m.json"), Error);
}

TEST(Manifest, VariantNotListed) {
  TempDir dir;
  touch(dir / "a.json");
  touch(dir / "audio/a.wav");
  write_json_file(dir / "m.json", {{"songs", {song("a")}}});
  const DatasetManifest m = load_manifest(dir / "m.json");
  EXPECT_THROW(m.songs[0].audio_path("stem"), MissingFile);
}

TEST(Manifest, Malformed) {
  TempDir dir;
  std::ofstream(dir / "m.json") << "{\"songs\": [";
  EXPECT_THROW(load_manifest(dir / "m.json"), Error);
  EXPECT_THROW(load_manifest(dir / "absent.json"), Error);
}

TEST(Manifest, BundledSyntheticSet) {
  const DatasetManifest m =
      load_manifest(testing::bundled_synthetic_dir() / "manifest.json",
                    {.require_audio = false});
  ASSERT_EQ(m.songs.size(), 3u);
  EXPECT_EQ(m.songs[0].audio.size(), 4u);
  for (const SongEntry& s : m.songs) {
    EXPECT_TRUE(s.audio.count("mix"));
    EXPECT_TRUE(s.audio.count("separated_mdx_extra"));
    EXPECT_FALSE(load_lyrics(s.lyrics_path).lines.empty());
  }
}

TEST(Lyrics, ParseAndReferenceWords) {
  const json j = {{"language", "en"},
                  {"lines",
                   {{{"start", 0.0}, {"end", 2.0}, {"text", "Oh oh (yeah)"}},
                    {{"start", 2.0}, {"end", 4.0}, {"text", "Hold me"}}}},
                  {"nonlexical", {{0, 0}, {0, 1}, {0, 2}}}};
  const LyricsFile l = parse_lyrics(j);
  ASSERT_EQ(l.lines.size(), 2u);
  EXPECT_EQ(l.texts(), (std::vector<std::string>{"Oh oh (yeah)", "Hold me"}));
  const std::vector<Token> words = reference_words(l, "song");
  ASSERT_EQ(words.size(), 5u);
  EXPECT_TRUE(words[0].is_nonlexical);
  EXPECT_TRUE(words[2].is_nonlexical);
  EXPECT_TRUE(words[2].is_backing);
  EXPECT_FALSE(words[3].is_nonlexical);
  EXPECT_EQ(words[3].line_index, 1);
  const LyricsFile again = parse_lyrics(lyrics_to_json(l));
  EXPECT_EQ(again.texts(), l.texts());
  EXPECT_EQ(again.nonlexical, l.nonlexical);
}

}  // namespace
}  // namespace lyreval
