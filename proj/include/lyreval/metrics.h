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

#include <cstdint>
#include <span>
#include <string>

#include "lyreval/align.h"
#include "lyreval/text_norm.h"

namespace lyreval {

// Edit counts of one or more alignments. I10 counts insertions that belong to
// a run of at least kHallucinationRun consecutive insertions; D_NL and D_BV
// count deletions of non-lexical / backing reference words (a word may count
// toward both).
struct EditCounts {
  std::int64_t hits = 0;
  std::int64_t substitutions = 0;
  std::int64_t deletions = 0;
  std::int64_t insertions = 0;
  std::int64_t insertions_in_runs = 0;  // I10
  std::int64_t deletions_nonlexical = 0;
  std::int64_t deletions_backing = 0;

  // Reference length N = S + D + H.
  std::int64_t reference_words() const {
    return substitutions + deletions + hits;
  }

  EditCounts& operator+=(const EditCounts& other);
  bool operator==(const EditCounts&) const = default;
};

EditCounts operator+(EditCounts a, const EditCounts& b);

inline constexpr std::size_t kHallucinationRun = 10;

EditCounts count_edits(const Alignment& alignment, std::span<const Token> ref);

// Exact ratio; all rates of one report share the denominator N.
struct Rate {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  double percent() const {
    return 100.0 * static_cast<double>(numerator) /
           static_cast<double>(denominator);
  }
  bool operator==(const Rate&) const = default;
};

struct MetricsReport {
  Rate wer, sr, dr, ir, ir10, dr_nl, dr_bv;
};

// Throws Error(kEmptyReference) when N == 0.
MetricsReport compute_rates(const EditCounts& counts);

// Componentwise sum. Throws Error(kEmptyInput) on an empty list.
EditCounts aggregate(std::span<const EditCounts> counts);

// Rates as percentages, used once runs have been averaged.
struct MetricPercentages {
  double wer = 0, sr = 0, dr = 0, ir = 0, ir10 = 0, dr_nl = 0, dr_bv = 0;
};

MetricPercentages to_percentages(const MetricsReport& report);

// Arithmetic mean of per-run rates. Throws Error(kEmptyInput) on no runs.
MetricPercentages average_runs(std::span<const MetricsReport> runs);

// "57.14" style rendering used by every report.
std::string format_percent(double percent);

}  // namespace lyreval
