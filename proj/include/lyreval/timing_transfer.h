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

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lyreval {

struct TimedWord {
  std::string text;
  double start = 0.0;
  double end = 0.0;
};

struct DerivedLine {
  std::string text;
  std::optional<double> start;
  std::optional<double> end;
  // No word of the line was aligned to a timed word; needs manual timing.
  bool ambiguous = false;
};

// Derives line timings for `target_lines` from a word-timed transcript of the
// same song. Target words are aligned (as reference) against the timed words
// (as hypothesis); a line spans from the earliest start to the latest end of
// the timed words paired with its words by a hit or substitution.
std::vector<DerivedLine> transfer_line_timings(
    std::span<const TimedWord> timed, std::span<const std::string> target_lines,
    const std::string& language);

}  // namespace lyreval
