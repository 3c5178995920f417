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
#include <filesystem>
#include <vector>

namespace lyreval {

struct AudioBuffer {
  std::vector<float> samples;  // mono, nominally in [-1, 1]
  int sample_rate = 0;

  double duration() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

// Decodes a RIFF/WAVE file: PCM 16/24/32-bit integer or 32-bit float,
// including WAVE_FORMAT_EXTENSIBLE. Channels are averaged to mono; the
// native sample rate is kept. Throws Error(kIoError) when the file cannot be
// read and Error(kUnsupportedFormat) for anything else it cannot decode.
AudioBuffer load_audio(const std::filesystem::path& path);

enum class WavEncoding { kPcm16, kFloat32 };

void write_wav(const std::filesystem::path& path, const AudioBuffer& audio,
               WavEncoding encoding = WavEncoding::kFloat32);

// Samples [round(start * sr), round(end * sr)), clamped to the buffer. No
// padding or fading is applied.
AudioBuffer cut_window(const AudioBuffer& audio, double start, double end);

}  // namespace lyreval
