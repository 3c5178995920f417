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

#include <cstddef>
#include <vector>

#include "lyreval/wav.h"

namespace lyreval {

struct VadConfig {
  double onset = 0.1;
  double offset = 0.1;
  double min_silence = 1.0;  // seconds
  double max_len = 30.0;     // seconds
  std::size_t frame_size = 2048;
  std::size_t hop = 512;

  // Throws Error(kInvalidArgument) unless 0 < offset <= onset < 1,
  // min_silence > 0, max_len > 0 and frame_size, hop > 0.
  void validate() const;
};

// Max-normalized RMS envelope plus what is needed to map frames to time.
// Frame t is placed at the centre of its analysis window,
// (t * hop + frame_size / 2) / sample_rate, clamped to the signal duration.
struct VadScores {
  std::vector<double> scores;
  std::size_t hop = 0;
  std::size_t frame_size = 0;
  int sample_rate = 0;
  std::size_t num_samples = 0;

  double frame_time(std::size_t frame) const;
};

// Inclusive frame index span.
struct FrameSpan {
  std::size_t first = 0;
  std::size_t last = 0;
  bool operator==(const FrameSpan&) const = default;
};

struct Segment {
  double start = 0.0;  // seconds
  double end = 0.0;
  bool operator==(const Segment&) const = default;
};

// Frame t covers samples [t * hop, t * hop + frame_size); the last frame is
// zero-padded. Throws Error(kAudioTooShort) when the signal is shorter than
// one frame.
std::vector<double> compute_rms(const AudioBuffer& audio,
                                std::size_t frame_size, std::size_t hop);

// Divides by the global maximum. Throws Error(kSilentSignal) if every frame
// is zero and Error(kEmptyInput) if there are no frames.
VadScores normalize_scores(const std::vector<double>& rms, std::size_t hop,
                           std::size_t frame_size, int sample_rate,
                           std::size_t num_samples);

// Hysteresis thresholding. A region opens on a frame >= onset and closes once
// at least ceil(min_silence * sr / hop) consecutive frames stay below offset.
// Spans run from the opening frame to the last frame >= offset.
std::vector<FrameSpan> binarize(const VadScores& scores, const VadConfig& cfg);

// Margin kept free of cut points at both ends of a region, seconds.
inline constexpr double kCutMargin = 0.5;

// Normalized scores closer than this count as equal when picking a cut
// frame. Periodic signals produce minima that repeat up to float rounding;
// without it the chosen frame would depend on the input gain.
inline constexpr double kScoreTieTolerance = 1e-8;

// Recursively splits every region longer than max_len at its lowest-scoring
// frame (earliest within kScoreTieTolerance) outside a kCutMargin margin at
// each edge. The cut frame ends the left piece and starts the right one. Throws
// Error(kUnsplittableRegion) if an over-long region has no admissible frame.
std::vector<FrameSpan> cut_long_regions(const std::vector<FrameSpan>& regions,
                                        const VadScores& scores,
                                        double max_len);

// Greedy left-to-right merge: the current segment absorbs the next region
// while the merged span stays within max_len.
std::vector<Segment> merge_adjacent(const std::vector<FrameSpan>& regions,
                                    const VadScores& scores, double max_len);

// compute_rms -> normalize_scores -> binarize -> cut_long_regions ->
// merge_adjacent.
std::vector<Segment> rms_vad(const AudioBuffer& vocals, const VadConfig& cfg);

}  // namespace lyreval
