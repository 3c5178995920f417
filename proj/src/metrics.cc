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

#include "lyreval/metrics.h"

#include <cmath>
#include <cstdio>

#include "lyreval/error.h"

namespace lyreval {

EditCounts& EditCounts::operator+=(const EditCounts& other) {
  hits += other.hits;
  substitutions += other.substitutions;
  deletions += other.deletions;
  insertions += other.insertions;
  insertions_in_runs += other.insertions_in_runs;
  deletions_nonlexical += other.deletions_nonlexical;
  deletions_backing += other.deletions_backing;
  return *this;
}

EditCounts operator+(EditCounts a, const EditCounts& b) { return a += b; }

EditCounts count_edits(const Alignment& alignment, std::span<const Token> ref) {
  EditCounts c;
  std::int64_t run = 0;
  auto close_run = [&] {
    if (run >= static_cast<std::int64_t>(kHallucinationRun)) {
      c.insertions_in_runs += run;
    }
    run = 0;
  };
  for (const EditOp& op : alignment.ops) {
    if (op.kind == EditKind::kInsertion) {
      ++c.insertions;
      ++run;
      continue;
    }
    close_run();
    switch (op.kind) {
      case EditKind::kHit: ++c.hits; break;
      case EditKind::kSubstitution: ++c.substitutions; break;
      case EditKind::kDeletion: {
        ++c.deletions;
        const Token& word = ref[*op.ref_index];
        if (word.is_nonlexical) ++c.deletions_nonlexical;
        if (word.is_backing) ++c.deletions_backing;
        break;
      }
      case EditKind::kInsertion: break;
    }
  }
  close_run();
  return c;
}

MetricsReport compute_rates(const EditCounts& c) {
  const std::int64_t n = c.reference_words();
  if (n <= 0) {
    throw Error(ErrorCode::kEmptyReference, "reference has no words");
  }
  auto rate = [n](std::int64_t num) { return Rate{num, n}; };
  MetricsReport r;
  r.wer = rate(c.substitutions + c.deletions + c.insertions);
  r.sr = rate(c.substitutions);
  r.dr = rate(c.deletions);
  r.ir = rate(c.insertions);
  r.ir10 = rate(c.insertions_in_runs);
  r.dr_nl = rate(c.deletions_nonlexical);
  r.dr_bv = rate(c.deletions_backing);
  return r;
}

EditCounts aggregate(std::span<const EditCounts> counts) {
  if (counts.empty()) {
    throw Error(ErrorCode::kEmptyInput, "nothing to aggregate");
  }
  EditCounts total;
  for (const EditCounts& c : counts) total += c;
  return total;
}

MetricPercentages to_percentages(const MetricsReport& r) {
  return {r.wer.percent(), r.sr.percent(),    r.dr.percent(),
          r.ir.percent(),  r.ir10.percent(),  r.dr_nl.percent(),
          r.dr_bv.percent()};
}

MetricPercentages average_runs(std::span<const MetricsReport> runs) {
  if (runs.empty()) throw Error(ErrorCode::kEmptyInput, "no runs to average");
  MetricPercentages sum;
  for (const MetricsReport& run : runs) {
    const MetricPercentages p = to_percentages(run);
    sum.wer += p.wer;
    sum.sr += p.sr;
    sum.dr += p.dr;
    sum.ir += p.ir;
    sum.ir10 += p.ir10;
    sum.dr_nl += p.dr_nl;
    sum.dr_bv += p.dr_bv;
  }
  const double k = static_cast<double>(runs.size());
  return {sum.wer / k,  sum.sr / k,    sum.dr / k,   sum.ir / k,
          sum.ir10 / k, sum.dr_nl / k, sum.dr_bv / k};
}

std::string format_percent(double percent) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", percent);
  return buf;
}

}  // namespace lyreval
