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
#include <limits>
#include <numeric>

#include "lyreval/error.h"

namespace lyreval {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

Sample combine(std::span<const Sample> parts, SampleKind kind) {
  Sample out;
  out.kind = kind;
  out.start = std::numeric_limits<double>::infinity();
  out.end = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out.start = std::min(out.start, parts[i].start);
    out.end = std::max(out.end, parts[i].end);
    if (i > 0) out.text += '\n';
    out.text += parts[i].text;
    out.source_lines.insert(out.source_lines.end(),
                            parts[i].source_lines.begin(),
                            parts[i].source_lines.end());
  }
  std::sort(out.source_lines.begin(), out.source_lines.end());
  return out;
}

}  // namespace

double overlap(const Line& a, const Line& b) {
  return std::max(0.0, std::min(a.end, b.end) - std::max(a.start, b.start));
}

MergeResult merge_overlapping_lines(std::span<const Line> lines,
                                    double overlap_thresh, double max_len) {
  DisjointSets sets(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (overlap(lines[i], lines[j]) > overlap_thresh) sets.unite(i, j);
    }
  }
  // Roots are the smallest index of each component, so iterating lines in
  // order visits every component's lines in original order.
  std::vector<std::vector<std::size_t>> members(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) members[sets.find(i)].push_back(i);

  MergeResult result;
  for (const auto& component : members) {
    if (component.empty()) continue;
    Sample s;
    s.kind = SampleKind::kMergedLine;
    s.start = std::numeric_limits<double>::infinity();
    s.end = -std::numeric_limits<double>::infinity();
    for (std::size_t idx : component) {
      s.start = std::min(s.start, lines[idx].start);
      s.end = std::max(s.end, lines[idx].end);
      if (idx != component.front()) s.text += '\n';
      s.text += lines[idx].text;
    }
    s.source_lines = component;
    if (s.duration() > max_len) {
      ++result.excluded;
      continue;
    }
    result.samples.push_back(std::move(s));
  }
  std::stable_sort(result.samples.begin(), result.samples.end(),
                   [](const Sample& a, const Sample& b) { return a.start < b.start; });
  return result;
}

std::vector<std::vector<Sample>> split_on_gaps(std::span<const Sample> samples,
                                               double gap) {
  std::vector<std::vector<Sample>> runs;
  double run_end = 0.0;
  for (const Sample& s : samples) {
    if (runs.empty() || s.start - run_end > gap) {
      runs.emplace_back();
      run_end = s.end;
    }
    runs.back().push_back(s);
    run_end = std::max(run_end, s.end);
  }
  return runs;
}

double subgroup_span(std::span<const Sample> run, std::size_t first,
                     std::size_t last) {
  double start = std::numeric_limits<double>::infinity();
  double end = -std::numeric_limits<double>::infinity();
  for (std::size_t k = first; k < last; ++k) {
    start = std::min(start, run[k].start);
    end = std::max(end, run[k].end);
  }
  return end - start;
}

std::vector<std::size_t> partition_run(std::span<const Sample> run,
                                       double max_len) {
  const std::size_t n = run.size();
  if (n == 0) throw Error(ErrorCode::kEmptyInput, "empty run");
  for (const Sample& s : run) {
    if (s.duration() >= max_len) {
      throw Error(ErrorCode::kInfeasiblePartition,
                  "sample of " + std::to_string(s.duration()) +
                      " s cannot fit in a subgroup shorter than " +
                      std::to_string(max_len) + " s");
    }
  }

  // span[i][j] for the subgroup run[i, j).
  std::vector<std::vector<double>> span(n, std::vector<double>(n + 1, 0.0));
  std::vector<double> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      span[i][j] = subgroup_span(run, i, j);
      if (span[i][j] < max_len) candidates.push_back(span[i][j]);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  // parts[i]: fewest subgroups covering run[i, n) with every span in
  // [floor, max_len), kNone if impossible.
  auto min_parts = [&](double floor) {
    std::vector<std::size_t> parts(n + 1, kNone);
    parts[n] = 0;
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        if (span[i][j] >= max_len) break;
        if (span[i][j] >= floor && parts[j] != kNone) {
          parts[i] = std::min(parts[i], parts[j] + 1);
        }
      }
    }
    return parts;
  };

  // Feasibility is monotone in the floor; the singleton partition makes the
  // smallest candidate feasible.
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (min_parts(candidates[mid])[0] != kNone) lo = mid; else hi = mid - 1;
  }
  const double best_floor = candidates[lo];
  const std::vector<std::size_t> parts = min_parts(best_floor);

  std::vector<std::size_t> splits;
  std::size_t i = 0;
  while (i < n) {
    std::size_t next = kNone;
    for (std::size_t j = i + 1; j <= n && span[i][j] < max_len; ++j) {
      if (span[i][j] >= best_floor && parts[j] != kNone &&
          parts[j] + 1 == parts[i]) {
        next = j;
        break;
      }
    }
    if (next == kNone) {
      throw Error(ErrorCode::kInfeasiblePartition, "no partition found");
    }
    if (next < n) splits.push_back(next);
    i = next;
  }
  return splits;
}

std::vector<std::vector<Sample>> apply_partition(
    std::span<const Sample> run, std::span<const std::size_t> splits) {
  std::vector<std::vector<Sample>> groups;
  std::size_t begin = 0;
  auto take = [&](std::size_t end) {
    groups.emplace_back(run.begin() + static_cast<std::ptrdiff_t>(begin),
                        run.begin() + static_cast<std::ptrdiff_t>(end));
    begin = end;
  };
  for (std::size_t split : splits) take(split);
  take(run.size());
  return groups;
}

GroupResult group_lines(std::span<const Line> lines) {
  const MergeResult merged = merge_overlapping_lines(lines);
  GroupResult result;
  result.excluded = merged.excluded;
  // A merged line of exactly max_len is a valid merged sample but can never
  // fit in a group.
  std::vector<Sample> usable;
  for (const Sample& s : merged.samples) {
    if (s.duration() < kMaxSampleLength) {
      usable.push_back(s);
    } else {
      ++result.excluded;
    }
  }
  for (const std::vector<Sample>& run : split_on_gaps(usable)) {
    const std::vector<std::size_t> splits = partition_run(run);
    for (const std::vector<Sample>& subgroup : apply_partition(run, splits)) {
      result.groups.push_back(combine(subgroup, SampleKind::kGroup));
    }
  }
  return result;
}

std::vector<Line> sorted_by_start(std::span<const Line> lines) {
  std::vector<Line> out(lines.begin(), lines.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const Line& a, const Line& b) { return a.start < b.start; });
  return out;
}

}  // namespace lyreval
