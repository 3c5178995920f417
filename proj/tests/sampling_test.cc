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

#include "lyreval/sampling.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "lyreval/error.h"
#include "support/oracles.h"

namespace lyreval {
namespace {

using testing::brute_force_partition;
using testing::random_run;

Sample sample(double start, double end) {
  Sample s;
  s.start = start;
  s.end = end;
  return s;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

// Random song: lines in time order with occasional overlaps and long gaps.
// Times are multiples of 1/64 s so that shifting them is exact.
std::vector<Line> random_song(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> raw(0.0, 1.0);
  auto u = [&](std::mt19937& g) { return std::round(raw(g) * 64.0) / 64.0; };
  std::vector<Line> lines;
  double t = u(rng) * 5.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double dur = 0.5 + u(rng) * 6.0;
    lines.push_back({t, t + dur, "line " + std::to_string(k)});
    const double r = u(rng);
    if (r < 0.15) {
      t += dur - u(rng) * 1.0;  // overlap with the next line
    } else if (r < 0.25) {
      t += dur + 7.0 + u(rng) * 5.0;
    } else {
      t += dur + u(rng) * 2.0;
    }
  }
  return sorted_by_start(lines);
}

TEST(Overlap, Definition) {
  EXPECT_DOUBLE_EQ(overlap({0, 3, ""}, {2.5, 5, ""}), 0.5);
  EXPECT_DOUBLE_EQ(overlap({0, 3, ""}, {4, 5, ""}), 0.0);
  EXPECT_DOUBLE_EQ(overlap({0, 10, ""}, {2, 3, ""}), 1.0);
}

TEST(MergeOverlappingLines, AboveThresholdMerges) {
  const std::vector<Line> lines = {{0, 3, "A"}, {2.5, 5, "B"}};
  const MergeResult r = merge_overlapping_lines(lines);
  ASSERT_EQ(r.samples.size(), 1u);
  EXPECT_DOUBLE_EQ(r.samples[0].start, 0.0);
  EXPECT_DOUBLE_EQ(r.samples[0].end, 5.0);
  EXPECT_EQ(r.samples[0].text, "A\nB");
  EXPECT_EQ(r.samples[0].kind, SampleKind::kMergedLine);
  EXPECT_EQ(r.samples[0].source_lines, (std::vector<std::size_t>{0, 1}));
}

TEST(MergeOverlappingLines, BelowThresholdStaysSeparate) {
  const std::vector<Line> lines = {{0, 3, "A"}, {2.9, 5, "B"}};
  EXPECT_EQ(merge_overlapping_lines(lines).samples.size(), 2u);
}

TEST(MergeOverlappingLines, TransitiveAndExcluded) {
  // A-B and B-C overlap, A and C do not: one component.
  const std::vector<Line> lines = {
      {0, 4, "A"}, {3, 8, "B"}, {7, 12, "C"}, {20, 40, "D"}, {35, 55, "E"}};
  const MergeResult r = merge_overlapping_lines(lines);
  ASSERT_EQ(r.samples.size(), 1u);
  EXPECT_EQ(r.samples[0].text, "A\nB\nC");
  EXPECT_EQ(r.excluded, 1u);  // D+E spans 35 s
}

TEST(MergeOverlappingLines, ExactlyThirtySecondsIsKept) {
  const std::vector<Line> lines = {{0, 30, "long"}};
  const MergeResult r = merge_overlapping_lines(lines);
  EXPECT_EQ(r.samples.size(), 1u);
  EXPECT_EQ(r.excluded, 0u);
  const GroupResult g = group_lines(lines);
  EXPECT_TRUE(g.groups.empty());
  EXPECT_EQ(g.excluded, 1u);
}

TEST(SplitOnGaps, GapThreshold) {
  const std::vector<Sample> eight = {sample(0, 2), sample(10, 12)};
  EXPECT_EQ(split_on_gaps(eight).size(), 2u);
  const std::vector<Sample> six = {sample(0, 2), sample(8, 12)};
  EXPECT_EQ(split_on_gaps(six).size(), 1u);
  const std::vector<Sample> one = {sample(3, 4)};
  EXPECT_EQ(split_on_gaps(one).size(), 1u);
  EXPECT_TRUE(split_on_gaps({}).empty());
}

TEST(SplitOnGaps, MeasuresFromLatestEnd) {
  // The middle sample is nested in the first; the gap to the third counts
  // from 20 s, not 5 s.
  const std::vector<Sample> s = {sample(0, 20), sample(4, 5), sample(14, 16)};
  EXPECT_EQ(split_on_gaps(s).size(), 1u);
}

TEST(PartitionRun, ShortRunIsKept) {
  const std::vector<Sample> run = {sample(0, 8), sample(9, 20)};
  EXPECT_TRUE(partition_run(run).empty());
}

TEST(PartitionRun, FourSampleExample) {
  const std::vector<Sample> run = {sample(0, 12), sample(13, 24),
                                   sample(25, 36), sample(37, 45)};
  EXPECT_EQ(partition_run(run), (std::vector<std::size_t>{2}));
  const auto groups = apply_partition(run, std::vector<std::size_t>{2});
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_DOUBLE_EQ(subgroup_span(groups[1], 0, groups[1].size()), 20.0);
  const auto brute = brute_force_partition(run, 30.0);
  EXPECT_DOUBLE_EQ(brute.min_span, 20.0);
  EXPECT_EQ(brute.splits, (std::vector<std::size_t>{2}));
}

TEST(PartitionRun, Errors) {
  const std::vector<Sample> run = {sample(0, 5), sample(6, 37)};
  EXPECT_EQ(code_of([&] { partition_run(run); }), ErrorCode::kInfeasiblePartition);
  EXPECT_EQ(code_of([] { partition_run({}); }), ErrorCode::kEmptyInput);
}

TEST(GroupLines, EmptySong) {
  const GroupResult g = group_lines({});
  EXPECT_TRUE(g.groups.empty());
  EXPECT_EQ(g.excluded, 0u);
}

TEST(GroupLines, RunsAndPartitions) {
  std::vector<Line> lines;
  for (int k = 0; k < 7; ++k) {
    lines.push_back({1.0 + 6.0 * k, 6.0 + 6.0 * k, "l" + std::to_string(k)});
  }
  lines.push_back({60, 62, "after gap"});
  const GroupResult g = group_lines(lines);
  ASSERT_EQ(g.groups.size(), 3u);
  EXPECT_EQ(g.groups[2].text, "after gap");
  for (const Sample& s : g.groups) {
    EXPECT_EQ(s.kind, SampleKind::kGroup);
    EXPECT_LT(s.duration(), 30.0);
  }
  EXPECT_EQ(g.groups[0].source_lines.size() + g.groups[1].source_lines.size(), 7u);
}

// Properties.

TEST(PartitionProperties, MatchesBruteForce) {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const auto run = random_run(rng, n);
    const auto brute = brute_force_partition(run, 30.0);
    ASSERT_GE(brute.min_span, 0.0);
    const auto splits = partition_run(run);
    EXPECT_EQ(splits, brute.splits) << "trial " << trial;
    double min_span = 1e9;
    for (const auto& g : apply_partition(run, splits)) {
      const double span = subgroup_span(g, 0, g.size());
      EXPECT_LT(span, 30.0);
      min_span = std::min(min_span, span);
    }
    EXPECT_GE(min_span, brute.min_span);
  }
}

TEST(SamplingProperties, MergedLinesCoverEveryLineOnce) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const auto lines = random_song(rng, 1 + rng() % 40);
    const MergeResult r = merge_overlapping_lines(lines);
    std::multiset<std::size_t> seen;
    for (const Sample& s : r.samples) {
      EXPECT_LE(s.duration(), 30.0);
      for (std::size_t i : s.source_lines) seen.insert(i);
      EXPECT_NE(s.text.find(lines[s.source_lines.front()].text),
                std::string::npos);
    }
    std::size_t excluded_lines = lines.size() - seen.size();
    for (std::size_t i = 0; i < lines.size(); ++i) EXPECT_LE(seen.count(i), 1u);
    EXPECT_EQ(excluded_lines == 0, r.excluded == 0);
    // Lines in different samples never overlap by more than the threshold.
    for (std::size_t a = 0; a < r.samples.size(); ++a) {
      for (std::size_t b = a + 1; b < r.samples.size(); ++b) {
        for (std::size_t i : r.samples[a].source_lines) {
          for (std::size_t j : r.samples[b].source_lines) {
            EXPECT_LE(overlap(lines[i], lines[j]), kOverlapThreshold);
          }
        }
      }
    }
  }
}

TEST(SamplingProperties, GroupInvariants) {
  std::mt19937 rng(78);
  for (int trial = 0; trial < 200; ++trial) {
    const auto lines = random_song(rng, 1 + rng() % 40);
    const GroupResult g = group_lines(lines);
    std::set<std::size_t> seen;
    for (std::size_t k = 0; k < g.groups.size(); ++k) {
      const Sample& s = g.groups[k];
      EXPECT_LT(s.duration(), 30.0);
      EXPECT_TRUE(std::is_sorted(s.source_lines.begin(), s.source_lines.end()));
      for (std::size_t i : s.source_lines) EXPECT_TRUE(seen.insert(i).second);
      if (k > 0) {
        EXPECT_LE(g.groups[k - 1].start, s.start);
        for (std::size_t i : g.groups[k - 1].source_lines) {
          for (std::size_t j : s.source_lines) {
            EXPECT_LE(overlap(lines[i], lines[j]), kOverlapThreshold);
          }
        }
      }
    }
  }
}

TEST(SamplingProperties, TimeShiftInvariance) {
  std::mt19937 rng(79);
  for (int trial = 0; trial < 100; ++trial) {
    const auto lines = random_song(rng, 1 + rng() % 30);
    std::vector<Line> shifted = lines;
    for (Line& l : shifted) {
      l.start += 64.0;
      l.end += 64.0;
    }
    const GroupResult a = group_lines(lines), b = group_lines(shifted);
    ASSERT_EQ(a.groups.size(), b.groups.size());
    EXPECT_EQ(a.excluded, b.excluded);
    for (std::size_t k = 0; k < a.groups.size(); ++k) {
      EXPECT_EQ(a.groups[k].source_lines, b.groups[k].source_lines);
      EXPECT_EQ(a.groups[k].text, b.groups[k].text);
      EXPECT_EQ(a.groups[k].start + 64.0, b.groups[k].start);
    }
  }
}

}  // namespace
}  // namespace lyreval
