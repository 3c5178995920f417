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

#include <string>

namespace lyreval {

struct ProcessResult {
  int exit_code = 0;  // 128 + signal number if the child was killed
  std::string stdout_text;
  std::string stderr_text;
};

// Runs `command` through /bin/sh -c, feeding `input` on standard input and
// collecting both output streams. Throws Error(kIoError) if the process
// cannot be started.
ProcessResult run_process(const std::string& command, const std::string& input);

}  // namespace lyreval
