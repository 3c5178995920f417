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

#include "lyreval/wav.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "lyreval/error.h"

namespace lyreval {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>(v >> 8));
}

[[noreturn]] void unsupported(const std::filesystem::path& path,
                              const std::string& why) {
  throw Error(ErrorCode::kUnsupportedFormat, path.string() + ": " + why);
}

}  // namespace

AudioBuffer load_audio(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  const std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                         std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    unsupported(path, "not a RIFF/WAVE file");
  }

  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  const unsigned char* data = nullptr;
  std::size_t data_size = 0;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* chunk = bytes.data() + pos;
    const std::size_t size = read_u32(chunk + 4);
    const std::size_t body = pos + 8;
    const std::size_t available = std::min(size, bytes.size() - body);
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (available < 16) unsupported(path, "truncated fmt chunk");
      format = read_u16(chunk + 8);
      channels = read_u16(chunk + 10);
      rate = read_u32(chunk + 12);
      bits = read_u16(chunk + 22);
      if (format == kFormatExtensible) {
        if (available < 26) unsupported(path, "truncated extensible fmt chunk");
        format = read_u16(chunk + 8 + 24);  // first two bytes of SubFormat
      }
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = chunk + 8;
      data_size = available;
    }
    pos = body + size + (size & 1);
  }
  if (channels == 0 || rate == 0) unsupported(path, "missing fmt chunk");
  if (data == nullptr) unsupported(path, "missing data chunk");
  const bool is_int = format == kFormatPcm && (bits == 16 || bits == 24 || bits == 32);
  const bool is_float = format == kFormatFloat && bits == 32;
  if (!is_int && !is_float) {
    unsupported(path, "format " + std::to_string(format) + " with " +
                          std::to_string(bits) + " bits");
  }

  const std::size_t width = bits / 8;
  const std::size_t frames = data_size / (width * channels);
  if (frames == 0) unsupported(path, "no samples");

  AudioBuffer audio;
  audio.sample_rate = static_cast<int>(rate);
  audio.samples.resize(frames);
  for (std::size_t f = 0; f < frames; ++f) {
    double acc = 0.0;
    for (std::size_t c = 0; c < channels; ++c) {
      const unsigned char* p = data + (f * channels + c) * width;
      double v = 0.0;
      if (is_float) {
        float x;
        const std::uint32_t raw = read_u32(p);
        std::memcpy(&x, &raw, sizeof(x));
        v = x;
      } else if (bits == 16) {
        v = static_cast<std::int16_t>(read_u16(p)) / 32768.0;
      } else if (bits == 24) {
        std::int32_t x = p[0] | (p[1] << 8) | (p[2] << 16);
        if (x & 0x800000) x -= 0x1000000;
        v = x / 8388608.0;
      } else {
        v = static_cast<std::int32_t>(read_u32(p)) / 2147483648.0;
      }
      acc += v;
    }
    const double mono = acc / channels;
    if (!std::isfinite(mono)) unsupported(path, "non-finite sample");
    audio.samples[f] = static_cast<float>(mono);
  }
  return audio;
}

void write_wav(const std::filesystem::path& path, const AudioBuffer& audio,
               WavEncoding encoding) {
  const bool pcm = encoding == WavEncoding::kPcm16;
  const std::uint16_t bits = pcm ? 16 : 32;
  const std::uint32_t data_size =
      static_cast<std::uint32_t>(audio.samples.size() * (bits / 8));
  std::string out;
  out.reserve(44 + data_size);
  out += "RIFF";
  put_u32(out, 36 + data_size);
  out += "WAVEfmt ";
  put_u32(out, 16);
  put_u16(out, pcm ? kFormatPcm : kFormatFloat);
  put_u16(out, 1);
  put_u32(out, static_cast<std::uint32_t>(audio.sample_rate));
  put_u32(out, static_cast<std::uint32_t>(audio.sample_rate) * (bits / 8));
  put_u16(out, bits / 8);
  put_u16(out, bits);
  out += "data";
  put_u32(out, data_size);
  for (float s : audio.samples) {
    if (pcm) {
      const double clamped = std::clamp(static_cast<double>(s), -1.0, 1.0);
      const auto v = static_cast<std::int16_t>(
          std::clamp(std::lround(clamped * 32768.0), -32768L, 32767L));
      put_u16(out, static_cast<std::uint16_t>(v));
    } else {
      std::uint32_t raw;
      std::memcpy(&raw, &s, sizeof(raw));
      put_u32(out, raw);
    }
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) throw Error(ErrorCode::kIoError, "short write to " + path.string());
}

AudioBuffer cut_window(const AudioBuffer& audio, double start, double end) {
  const auto clamp_index = [&](double t) {
    const double idx = std::round(t * audio.sample_rate);
    return static_cast<std::size_t>(
        std::clamp(idx, 0.0, static_cast<double>(audio.samples.size())));
  };
  const std::size_t first = clamp_index(start);
  const std::size_t last = std::max(first, clamp_index(end));
  AudioBuffer out;
  out.sample_rate = audio.sample_rate;
  out.samples.assign(audio.samples.begin() + static_cast<std::ptrdiff_t>(first),
                     audio.samples.begin() + static_cast<std::ptrdiff_t>(last));
  return out;
}

}  // namespace lyreval
