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

#include "lyreval/timing_transfer.h"

#include <algorithm>

#include "lyreval/align.h"
#include "lyreval/text_norm.h"

namespace lyreval {

std::vector<DerivedLine> transfer_line_timings(
    std::span<const TimedWord> timed, std::span<const std::string> target_lines,
    const std::string& language) {
  // A timed word may split into several tokens ("rock'n'roll," etc.); every
  // token keeps the index of the word it came from.
  std::vector<Token> hyp;
  std::vector<std::size_t> source_word;
  for (std::size_t w = 0; w < timed.size(); ++w) {
    for (Token& t : strip_nonwords(tokenize_hypothesis(timed[w].text))) {
      hyp.push_back(std::move(t));
      source_word.push_back(w);
    }
  }
  const std::vector<Token> ref =
      strip_nonwords(tokenize_lines(target_lines, language));

  std::vector<DerivedLine> out(target_lines.size());
  for (std::size_t l = 0; l < target_lines.size(); ++l) {
    out[l].text = target_lines[l];
  }
  for (const EditOp& op : align(ref, hyp).ops) {
    if (op.kind != EditKind::kHit && op.kind != EditKind::kSubstitution) {
      continue;
    }
    DerivedLine& line = out[static_cast<std::size_t>(ref[*op.ref_index].line_index)];
    const TimedWord& word = timed[source_word[*op.hyp_index]];
    line.start = line.start ? std::min(*line.start, word.start) : word.start;
    line.end = line.end ? std::max(*line.end, word.end) : word.end;
  }
  for (DerivedLine& line : out) line.ambiguous = !line.start.has_value();
  return out;
}

}  // namespace lyreval
