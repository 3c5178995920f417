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

#include <algorithm>
#include <cmath>
#include <functional>

#include "lyreval/error.h"

namespace lyreval {

void VadConfig::validate() const {
  if (!(offset > 0.0 && offset <= onset && onset < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "VAD thresholds must satisfy 0 < offset <= onset < 1");
  }
  if (!(min_silence > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "min_silence must be positive");
  }
  if (!(max_len > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "max_len must be positive");
  }
  if (frame_size == 0 || hop == 0) {
    throw Error(ErrorCode::kInvalidArgument, "frame_size and hop must be positive");
  }
}

double VadScores::frame_time(std::size_t frame) const {
  const double centre =
      static_cast<double>(frame * hop) + static_cast<double>(frame_size) / 2.0;
  return std::min(centre, static_cast<double>(num_samples)) / sample_rate;
}

std::vector<double> compute_rms(const AudioBuffer& audio,
                                std::size_t frame_size, std::size_t hop) {
  if (frame_size == 0 || hop == 0) {
    throw Error(ErrorCode::kInvalidArgument, "frame_size and hop must be positive");
  }
  const std::size_t n = audio.samples.size();
  if (n < frame_size) {
    throw Error(ErrorCode::kAudioTooShort,
                std::to_string(n) + " samples < frame of " +
                    std::to_string(frame_size));
  }
  const std::size_t frames = 1 + (n - frame_size + hop - 1) / hop;
  std::vector<double> rms(frames);
  for (std::size_t t = 0; t < frames; ++t) {
    const std::size_t begin = t * hop;
    const std::size_t end = std::min(begin + frame_size, n);
    double sum = 0.0;
    for (std::size_t k = begin; k < end; ++k) {
      const double x = audio.samples[k];
      sum += x * x;
    }
    rms[t] = std::sqrt(sum / static_cast<double>(frame_size));
  }
  return rms;
}

VadScores normalize_scores(const std::vector<double>& rms, std::size_t hop,
                           std::size_t frame_size, int sample_rate,
                           std::size_t num_samples) {
  if (rms.empty()) throw Error(ErrorCode::kEmptyInput, "no RMS frames");
  const double peak = *std::max_element(rms.begin(), rms.end());
  if (!(peak > 0.0)) {
    throw Error(ErrorCode::kSilentSignal, "no vocal activity in signal");
  }
  VadScores out;
  out.scores.reserve(rms.size());
  for (double v : rms) out.scores.push_back(v / peak);
  out.hop = hop;
  out.frame_size = frame_size;
  out.sample_rate = sample_rate;
  out.num_samples = num_samples;
  return out;
}

std::vector<FrameSpan> binarize(const VadScores& scores, const VadConfig& cfg) {
  cfg.validate();
  const auto min_silence_frames = static_cast<std::size_t>(std::ceil(
      cfg.min_silence * scores.sample_rate / static_cast<double>(scores.hop)));
  std::vector<FrameSpan> regions;
  bool open = false;
  FrameSpan current;
  std::size_t below = 0;
  for (std::size_t t = 0; t < scores.scores.size(); ++t) {
    const double s = scores.scores[t];
    if (!open) {
      if (s >= cfg.onset) {
        open = true;
        current = {t, t};
        below = 0;
      }
      continue;
    }
    if (s >= cfg.offset) {
      current.last = t;
      below = 0;
    } else if (++below >= min_silence_frames) {
      regions.push_back(current);
      open = false;
    }
  }
  if (open) regions.push_back(current);
  return regions;
}

namespace {

double span_seconds(const FrameSpan& r, const VadScores& scores) {
  return static_cast<double>((r.last - r.first) * scores.hop) /
         scores.sample_rate;
}

}  // namespace

std::vector<FrameSpan> cut_long_regions(const std::vector<FrameSpan>& regions,
                                        const VadScores& scores,
                                        double max_len) {
  const auto margin = static_cast<std::size_t>(
      std::ceil(kCutMargin * scores.sample_rate / static_cast<double>(scores.hop)));
  std::vector<FrameSpan> out;
  std::function<void(FrameSpan)> cut = [&](FrameSpan r) {
    if (span_seconds(r, scores) <= max_len) {
      out.push_back(r);
      return;
    }
    const std::size_t lo = r.first + std::max<std::size_t>(margin, 1);
    const std::size_t hi =
        r.last >= std::max<std::size_t>(margin, 1)
            ? r.last - std::max<std::size_t>(margin, 1)
            : 0;
    if (lo > hi) {
      throw Error(ErrorCode::kUnsplittableRegion,
                  "region of " + std::to_string(span_seconds(r, scores)) +
                      " s has no cut point outside the edge margins");
    }
    const double lowest =
        *std::min_element(scores.scores.begin() + static_cast<std::ptrdiff_t>(lo),
                          scores.scores.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
    std::size_t best = lo;
    while (scores.scores[best] > lowest + kScoreTieTolerance) ++best;
    cut({r.first, best});
    cut({best, r.last});
  };
  for (const FrameSpan& r : regions) cut(r);
  return out;
}

std::vector<Segment> merge_adjacent(const std::vector<FrameSpan>& regions,
                                    const VadScores& scores, double max_len) {
  std::vector<Segment> out;
  if (regions.empty()) return out;
  const double hop_seconds =
      static_cast<double>(scores.hop) / scores.sample_rate;
  auto emit = [&](const FrameSpan& r) {
    Segment s{scores.frame_time(r.first), scores.frame_time(r.last)};
    if (s.end <= s.start) s.end = s.start + hop_seconds;
    out.push_back(s);
  };
  FrameSpan current = regions.front();
  for (std::size_t i = 1; i < regions.size(); ++i) {
    const FrameSpan& next = regions[i];
    if (span_seconds({current.first, next.last}, scores) <= max_len) {
      current.last = next.last;
    } else {
      emit(current);
      current = next;
    }
  }
  emit(current);
  return out;
}

std::vector<Segment> rms_vad(const AudioBuffer& vocals, const VadConfig& cfg) {
  cfg.validate();
  const std::vector<double> rms = compute_rms(vocals, cfg.frame_size, cfg.hop);
  const VadScores scores =
      normalize_scores(rms, cfg.hop, cfg.frame_size, vocals.sample_rate,
                       vocals.samples.size());
  const std::vector<FrameSpan> regions = binarize(scores, cfg);
  return merge_adjacent(cut_long_regions(regions, scores, cfg.max_len), scores,
                        cfg.max_len);
}

}  // namespace lyreval
