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

#include "lyreval/vad.h"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "lyreval/error.h"

namespace lyreval {
namespace {

// 100 Hz sample rate and a hop of 10 make every frame 0.1 s long.
VadScores tenth_second_frames(std::vector<double> scores) {
  VadScores s;
  s.hop = 10;
  s.frame_size = 10;
  s.sample_rate = 100;
  s.num_samples = scores.size() * 10;
  s.scores = std::move(scores);
  return s;
}

AudioBuffer tone_bursts(int sr, double total,
                        const std::vector<std::pair<double, double>>& bursts,
                        float amplitude = 0.5f) {
  AudioBuffer a;
  a.sample_rate = sr;
  a.samples.assign(static_cast<std::size_t>(total * sr), 0.0f);
  for (auto [start, end] : bursts) {
    for (auto k = static_cast<std::size_t>(start * sr);
         k < static_cast<std::size_t>(end * sr); ++k) {
      a.samples[k] = amplitude * static_cast<float>(std::sin(
                         2.0 * std::numbers::pi * 330.0 * k / sr));
    }
  }
  return a;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

TEST(ComputeRms, ConstantSignal) {
  AudioBuffer a;
  a.sample_rate = 8000;
  a.samples.assign(4096, -0.25f);
  const auto rms = compute_rms(a, 2048, 512);
  ASSERT_EQ(rms.size(), 5u);
  for (double v : rms) EXPECT_DOUBLE_EQ(v, 0.25);
}

TEST(ComputeRms, LastFrameIsZeroPadded) {
  AudioBuffer a;
  a.sample_rate = 8000;
  a.samples.assign(2048 + 100, 1.0f);
  const auto rms = compute_rms(a, 2048, 512);
  ASSERT_EQ(rms.size(), 2u);
  EXPECT_DOUBLE_EQ(rms[1], std::sqrt((2048.0 - 412.0) / 2048.0));
}

TEST(ComputeRms, FullScaleSineOverWholePeriods) {
  AudioBuffer a;
  a.sample_rate = 16000;
  for (int k = 0; k < 16000; ++k) {
    a.samples.push_back(
        static_cast<float>(std::sin(2.0 * std::numbers::pi * 500.0 * k / 16000)));
  }
  const auto rms = compute_rms(a, 2048, 512);
  for (std::size_t t = 0; t * 512 + 2048 <= a.samples.size(); ++t) {
    EXPECT_NEAR(rms[t], 1.0 / std::numbers::sqrt2, 1e-4);
  }
}

TEST(ComputeRms, TooShort) {
  AudioBuffer a;
  a.sample_rate = 16000;
  a.samples.assign(100, 0.1f);
  EXPECT_EQ(code_of([&] { compute_rms(a, 2048, 512); }),
            ErrorCode::kAudioTooShort);
  VadConfig cfg;
  EXPECT_EQ(code_of([&] { rms_vad(a, cfg); }), ErrorCode::kAudioTooShort);
}

TEST(NormalizeScores, DividesByPeak) {
  const VadScores s = normalize_scores({0.2, 0.4, 0.1}, 512, 2048, 16000, 3072);
  ASSERT_EQ(s.scores.size(), 3u);
  EXPECT_DOUBLE_EQ(s.scores[0], 0.5);
  EXPECT_DOUBLE_EQ(s.scores[1], 1.0);
  EXPECT_DOUBLE_EQ(s.scores[2], 0.25);
  EXPECT_EQ(code_of([] { normalize_scores({0.0, 0.0}, 512, 2048, 16000, 4096); }),
            ErrorCode::kSilentSignal);
  EXPECT_EQ(code_of([] { normalize_scores({}, 512, 2048, 16000, 0); }),
            ErrorCode::kEmptyInput);
}

TEST(FrameTime, WindowCentreClampedToDuration) {
  VadScores s;
  s.hop = 512;
  s.frame_size = 2048;
  s.sample_rate = 16000;
  s.num_samples = 16000;
  EXPECT_DOUBLE_EQ(s.frame_time(0), 1024.0 / 16000);
  EXPECT_DOUBLE_EQ(s.frame_time(10), (5120.0 + 1024.0) / 16000);
  EXPECT_DOUBLE_EQ(s.frame_time(30), 1.0);
}

TEST(Binarize, ShortGapsAreBridged) {
  std::vector<double> v(70, 0.0);
  for (int t = 0; t < 10; ++t) v[t] = 1.0;
  for (int t = 30; t < 40; ++t) v[t] = 1.0;  // after a 2 s gap
  for (int t = 45; t < 50; ++t) v[t] = 1.0;  // after a 0.5 s gap
  const auto regions = binarize(tenth_second_frames(v), VadConfig{});
  EXPECT_EQ(regions, (std::vector<FrameSpan>{{0, 9}, {30, 49}}));
}

TEST(Binarize, Hysteresis) {
  VadConfig cfg;
  cfg.onset = 0.5;
  cfg.offset = 0.2;
  std::vector<double> v(40, 0.0);
  v[0] = 0.4;  // above offset but never reaches onset on its own
  v[5] = 0.6;
  for (int t = 6; t < 12; ++t) v[t] = 0.3;
  const auto regions = binarize(tenth_second_frames(v), cfg);
  EXPECT_EQ(regions, (std::vector<FrameSpan>{{5, 11}}));
}

TEST(Binarize, RegionOpenAtEndIsKept) {
  std::vector<double> v(20, 0.0);
  v[18] = 1.0;
  v[19] = 0.05;
  const auto regions = binarize(tenth_second_frames(v), VadConfig{});
  EXPECT_EQ(regions, (std::vector<FrameSpan>{{18, 18}}));
}

TEST(CutLongRegions, SplitsAtMinimum) {
  std::vector<double> v(451, 1.0);
  v[220] = 0.2;
  const auto s = tenth_second_frames(v);
  EXPECT_EQ(cut_long_regions({{0, 450}}, s, 30.0),
            (std::vector<FrameSpan>{{0, 220}, {220, 450}}));
}

TEST(CutLongRegions, RecursesIntoLongPieces) {
  std::vector<double> v(901, 1.0);
  v[150] = 0.5;
  v[400] = 0.1;
  v[650] = 0.3;
  const auto s = tenth_second_frames(v);
  EXPECT_EQ(cut_long_regions({{0, 900}}, s, 30.0),
            (std::vector<FrameSpan>{{0, 150}, {150, 400}, {400, 650}, {650, 900}}));
}

TEST(CutLongRegions, MinimumInsideMarginIsIgnored) {
  std::vector<double> v(401, 0.9);
  v[2] = 0.0;    // within 0.5 s of the start
  v[398] = 0.0;  // within 0.5 s of the end
  v[100] = 0.5;
  v[300] = 0.5;  // tie, earliest wins
  const auto s = tenth_second_frames(v);
  EXPECT_EQ(cut_long_regions({{0, 400}}, s, 30.0),
            (std::vector<FrameSpan>{{0, 100}, {100, 400}}));
}

TEST(CutLongRegions, NearTiesGoToEarliestFrame) {
  std::vector<double> v(401, 0.9);
  v[100] = 0.5 + 1e-10;
  v[300] = 0.5;
  v[350] = 0.5 - 1e-6;  // a real difference
  auto s = tenth_second_frames(v);
  EXPECT_EQ(cut_long_regions({{0, 400}}, s, 30.0),
            (std::vector<FrameSpan>{{0, 100}, {100, 350}, {350, 400}}));
  s.scores[350] = 0.9;
  EXPECT_EQ(cut_long_regions({{0, 400}}, s, 30.0),
            (std::vector<FrameSpan>{{0, 100}, {100, 400}}));
}

TEST(CutLongRegions, Unsplittable) {
  const auto s = tenth_second_frames(std::vector<double>(20, 1.0));
  EXPECT_EQ(code_of([&] { cut_long_regions({{0, 8}}, s, 0.1); }),
            ErrorCode::kUnsplittableRegion);
}

TEST(MergeAdjacent, GreedyWithinMaxLength) {
  const auto s = tenth_second_frames(std::vector<double>(500, 1.0));
  const auto segs = merge_adjacent({{0, 50}, {100, 200}, {250, 400}}, s, 30.0);
  ASSERT_EQ(segs.size(), 2u);
  EXPECT_DOUBLE_EQ(segs[0].start, 0.05);
  EXPECT_DOUBLE_EQ(segs[0].end, 20.05);
  EXPECT_DOUBLE_EQ(segs[1].start, 25.05);
  EXPECT_DOUBLE_EQ(segs[1].end, 40.05);
  EXPECT_TRUE(merge_adjacent({}, s, 30.0).empty());
}

TEST(MergeAdjacent, SingleFrameRegionHasPositiveLength) {
  const auto s = tenth_second_frames(std::vector<double>(50, 1.0));
  const auto segs = merge_adjacent({{7, 7}}, s, 30.0);
  ASSERT_EQ(segs.size(), 1u);
  EXPECT_LT(segs[0].start, segs[0].end);
}

TEST(RmsVad, BurstBoundaries) {
  const AudioBuffer a = tone_bursts(44100, 12.0, {{2.0, 5.0}, {7.0, 9.0}});
  const auto segs = rms_vad(a, VadConfig{});
  ASSERT_EQ(segs.size(), 1u);
  EXPECT_NEAR(segs[0].start, 2.0, 0.025);
  EXPECT_NEAR(segs[0].end, 9.0, 0.025);
}

TEST(RmsVad, SeparatedBurstsStaySeparateOnlyWhenTooLong) {
  // Two bursts 3 s apart merge because the combined span stays under 30 s.
  auto segs = rms_vad(tone_bursts(16000, 20.0, {{1.0, 5.0}, {8.0, 12.0}}),
                      VadConfig{});
  ASSERT_EQ(segs.size(), 1u);
  VadConfig tight;
  tight.max_len = 6.0;
  segs = rms_vad(tone_bursts(16000, 20.0, {{1.0, 5.0}, {8.0, 12.0}}), tight);
  ASSERT_EQ(segs.size(), 2u);
  EXPECT_NEAR(segs[1].start, 8.0, 0.05);
}

TEST(RmsVad, Silence) {
  AudioBuffer a;
  a.sample_rate = 16000;
  a.samples.assign(32000, 0.0f);
  EXPECT_EQ(code_of([&] { rms_vad(a, VadConfig{}); }), ErrorCode::kSilentSignal);
}

TEST(VadConfig, Validation) {
  VadConfig c;
  EXPECT_NO_THROW(c.validate());
  c.offset = 0.2;  // above onset
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.onset = 1.0;
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.min_silence = 0.0;
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.hop = 0;
  EXPECT_THROW(c.validate(), Error);
}

// Properties.

TEST(VadProperties, LongToneYieldsBoundedSegments) {
  const AudioBuffer a = tone_bursts(16000, 60.0, {{0.0, 60.0}});
  const auto segs = rms_vad(a, VadConfig{});
  ASSERT_GE(segs.size(), 2u);
  for (const Segment& s : segs) {
    EXPECT_LT(s.start, s.end);
    EXPECT_LE(s.end - s.start, 30.0 + 1e-9);
    EXPECT_GE(s.start, 0.0);
    EXPECT_LE(s.end, a.duration());
  }
  for (std::size_t i = 1; i < segs.size(); ++i) {
    EXPECT_LE(segs[i - 1].start, segs[i].start);
  }
  EXPECT_NEAR(segs.front().start, 0.0, 0.1);
  EXPECT_NEAR(segs.back().end, 60.0, 0.1);
}

TEST(VadProperties, RandomSignalsRespectMaxLength) {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::pair<double, double>> bursts;
    double t = u(rng) * 2.0;
    while (t < 80.0) {
      const double len = 0.2 + u(rng) * 25.0;
      bursts.push_back({t, std::min(t + len, 90.0)});
      t += len + u(rng) * 2.5;
    }
    const AudioBuffer a = tone_bursts(8000, 90.0, bursts);
    VadConfig cfg;
    cfg.max_len = 5.0 + u(rng) * 25.0;
    for (const Segment& s : rms_vad(a, cfg)) {
      EXPECT_LT(s.start, s.end);
      EXPECT_LE(s.end - s.start, cfg.max_len + 1e-9);
    }
  }
}

TEST(VadProperties, PowerOfTwoGainInvariance) {
  const AudioBuffer a = tone_bursts(16000, 30.0, {{1.0, 4.0}, {10.0, 25.0}});
  const auto base = rms_vad(a, VadConfig{});
  for (float gain : {0.25f, 4.0f, 0.0078125f}) {
    AudioBuffer b = a;
    for (float& x : b.samples) x *= gain;
    EXPECT_EQ(rms_vad(b, VadConfig{}), base) << "gain " << gain;
  }
}

TEST(VadProperties, ArbitraryGainOnStationaryTone) {
  const AudioBuffer a = tone_bursts(44100, 60.0, {{0.0, 60.0}});
  const auto base = rms_vad(a, VadConfig{});
  for (float gain : {0.01f, 0.3f, 1.7f}) {
    AudioBuffer b = a;
    for (float& x : b.samples) x *= gain;
    EXPECT_EQ(rms_vad(b, VadConfig{}), base) << "gain " << gain;
  }
}

TEST(VadProperties, RmsOfConcatenationWhenFramesTile) {
  std::mt19937 rng(8);
  std::uniform_real_distribution<float> u(-1.0f, 1.0f);
  for (int trial = 0; trial < 10; ++trial) {
    AudioBuffer x, y;
    x.sample_rate = y.sample_rate = 16000;
    x.samples.resize(512 * (1 + rng() % 20));
    y.samples.resize(512 * (1 + rng() % 20));
    for (float& s : x.samples) s = u(rng);
    for (float& s : y.samples) s = u(rng);
    AudioBuffer xy = x;
    xy.samples.insert(xy.samples.end(), y.samples.begin(), y.samples.end());
    auto expected = compute_rms(x, 512, 512);
    const auto tail = compute_rms(y, 512, 512);
    expected.insert(expected.end(), tail.begin(), tail.end());
    EXPECT_EQ(compute_rms(xy, 512, 512), expected);
  }
}

}  // namespace
}  // namespace lyreval
