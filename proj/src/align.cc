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

#include "lyreval/align.h"

#include <algorithm>
#include <sstream>

namespace lyreval {

std::size_t Alignment::cost() const {
  return static_cast<std::size_t>(
      std::count_if(ops.begin(), ops.end(),
                    [](const EditOp& op) { return op.kind != EditKind::kHit; }));
}

Alignment align(std::span<const Token> ref, std::span<const Token> hyp) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  // Lexicographic (edits, substitutions) packed into one integer: a unit edit
  // weighs more than any possible substitution count.
  const std::int64_t edit = static_cast<std::int64_t>(n + m + 1);
  const std::int64_t sub = edit + 1;
  const std::size_t cols = m + 1;
  std::vector<std::int64_t> dp((n + 1) * cols);
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& {
    return dp[i * cols + j];
  };

  for (std::size_t j = 0; j <= m; ++j) at(0, j) = static_cast<std::int64_t>(j) * edit;
  for (std::size_t i = 1; i <= n; ++i) {
    at(i, 0) = static_cast<std::int64_t>(i) * edit;
    for (std::size_t j = 1; j <= m; ++j) {
      const bool hit = ref[i - 1].norm == hyp[j - 1].norm;
      at(i, j) = std::min({at(i - 1, j - 1) + (hit ? 0 : sub),
                           at(i - 1, j) + edit, at(i, j - 1) + edit});
    }
  }

  Alignment out;
  out.ops.reserve(n + m);
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const bool hit = ref[i - 1].norm == hyp[j - 1].norm;
      if (at(i - 1, j - 1) + (hit ? 0 : sub) == at(i, j)) {
        out.ops.push_back({hit ? EditKind::kHit : EditKind::kSubstitution,
                           i - 1, j - 1});
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && at(i - 1, j) + edit == at(i, j)) {
      out.ops.push_back({EditKind::kDeletion, i - 1, std::nullopt});
      --i;
    } else {
      out.ops.push_back({EditKind::kInsertion, std::nullopt, j - 1});
      --j;
    }
  }
  std::reverse(out.ops.begin(), out.ops.end());
  return out;
}

std::string format_alignment(const Alignment& alignment,
                             std::span<const Token> ref,
                             std::span<const Token> hyp) {
  std::ostringstream os;
  for (const EditOp& op : alignment.ops) {
    switch (op.kind) {
      case EditKind::kHit: os << "HIT"; break;
      case EditKind::kSubstitution: os << "SUB"; break;
      case EditKind::kDeletion: os << "DEL"; break;
      case EditKind::kInsertion: os << "INS"; break;
    }
    os << ' ';
    if (op.ref_index) os << *op.ref_index; else os << '-';
    os << ' ';
    if (op.hyp_index) os << *op.hyp_index; else os << '-';
    os << ' ' << (op.ref_index ? ref[*op.ref_index].norm : "-");
    os << ' ' << (op.hyp_index ? hyp[*op.hyp_index].norm : "-");
    os << '\n';
  }
  return os.str();
}

}  // namespace lyreval
