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

#include <filesystem>
#include <span>
#include <string>

#include "lyreval/pipeline.h"

namespace lyreval {

enum class ReportLayout {
  kShortTable,     // Type | Audio | 7 metric columns
  kLongTable,      // Audio | Algorithm | 7 metric columns
  kLanguageTable,  // Audio | Setup | one WER column per language
  kPerSongCsv,     // one row per run x song x repeat
};

std::string render_report(std::span<const RunResult> results, ReportLayout layout);

// Writes render_report() to `out`. Throws Error(kIoError).
void emit_report(std::span<const RunResult> results, ReportLayout layout,
                 const std::filesystem::path& out);

}  // namespace lyreval
