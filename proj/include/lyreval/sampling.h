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
#include <span>
#include <string>
#include <vector>

namespace lyreval {

struct Line {
  double start = 0.0;
  double end = 0.0;
  std::string text;
};

enum class SampleKind { kMergedLine, kGroup };

struct Sample {
  double start = 0.0;
  double end = 0.0;
  std::string text;  // source line texts joined by '\n'
  SampleKind kind = SampleKind::kMergedLine;
  std::vector<std::size_t> source_lines;  // ascending

  double duration() const { return end - start; }
};

inline constexpr double kOverlapThreshold = 0.2;
inline constexpr double kMaxSampleLength = 30.0;
inline constexpr double kGroupGap = 7.0;

// max(0, min(end) - max(start)).
double overlap(const Line& a, const Line& b);

struct MergeResult {
  std::vector<Sample> samples;  // sorted by start
  std::size_t excluded = 0;     // components longer than max_len
};

// Lines overlapping by strictly more than `overlap_thresh` are linked; each
// connected component becomes one sample. Components longer than max_len are
// dropped and counted.
MergeResult merge_overlapping_lines(std::span<const Line> lines,
                                    double overlap_thresh = kOverlapThreshold,
                                    double max_len = kMaxSampleLength);

// Starts a new run when a sample begins more than `gap` seconds after the
// latest end seen in the current run.
std::vector<std::vector<Sample>> split_on_gaps(std::span<const Sample> samples,
                                               double gap = kGroupGap);

// Earliest start to latest end of samples[first, last).
double subgroup_span(std::span<const Sample> run, std::size_t first,
                     std::size_t last);

// Split points (exclusive end indices of every subgroup but the last) of the
// partition of `run` into consecutive subgroups, each spanning < max_len,
// whose shortest subgroup is as long as possible. Ties: fewest subgroups,
// then lexicographically smallest split points. Throws
// Error(kInfeasiblePartition) if a single sample spans >= max_len and
// Error(kEmptyInput) for an empty run.
std::vector<std::size_t> partition_run(std::span<const Sample> run,
                                       double max_len = kMaxSampleLength);

// Applies split points from partition_run.
std::vector<std::vector<Sample>> apply_partition(
    std::span<const Sample> run, std::span<const std::size_t> splits);

struct GroupResult {
  std::vector<Sample> groups;
  std::size_t excluded = 0;  // merged lines dropped before grouping
};

// merge_overlapping_lines -> split_on_gaps -> partition_run, one Group
// sample per subgroup.
GroupResult group_lines(std::span<const Line> lines);

// Lines are expected in time order; this sorts by start (stable).
std::vector<Line> sorted_by_start(std::span<const Line> lines);

}  // namespace lyreval
