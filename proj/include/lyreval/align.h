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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lyreval/text_norm.h"

namespace lyreval {

enum class EditKind { kHit, kSubstitution, kDeletion, kInsertion };

struct EditOp {
  EditKind kind = EditKind::kHit;
  std::optional<std::size_t> ref_index;
  std::optional<std::size_t> hyp_index;

  bool operator==(const EditOp&) const = default;
};

struct Alignment {
  std::vector<EditOp> ops;

  // Number of substitutions, deletions and insertions.
  std::size_t cost() const;
};

// Word-level Levenshtein alignment over Token::norm. Both inputs must be
// word tokens only (see strip_nonwords).
//
// Among all alignments with the minimum number of edits, one with the fewest
// substitutions (hence the most hits) is returned. Remaining ties are broken
// during the backtrace from the end: diagonal, then deletion, then insertion.
Alignment align(std::span<const Token> ref, std::span<const Token> hyp);

// Debug dump, one op per line:
//   HIT|SUB|DEL|INS <ref_idx|-> <hyp_idx|-> <ref_word|-> <hyp_word|->
std::string format_alignment(const Alignment& alignment,
                             std::span<const Token> ref,
                             std::span<const Token> hyp);

}  // namespace lyreval
