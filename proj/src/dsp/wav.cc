// Copyright (c) 2026 promptstyle-cpp authors
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

#include "dsp/wav.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace promptstyle {

namespace {

uint32_t ReadU32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t ReadU16(const uint8_t* p) {
  return static_cast<uint16_t>(p[0]) | (static_cast<uint16_t>(p[1]) << 8);
}

void PutU32(std::string* s, uint32_t v) {
  for (int i = 0; i < 4; ++i) s->push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void PutU16(std::string* s, uint16_t v) {
  for (int i = 0; i < 2; ++i) s->push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

}  // namespace

Waveform ReadWav(const std::string& path, int expected_rate) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open wav file: " + path);
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  const uint8_t* p = reinterpret_cast<const uint8_t*>(data.data());
  if (data.size() < 44 || std::memcmp(p, "RIFF", 4) != 0 ||
      std::memcmp(p + 8, "WAVE", 4) != 0) {
    throw std::runtime_error("not a RIFF/WAVE file: " + path);
  }

  size_t pos = 12;
  int channels = 0, sample_rate = 0, bits = 0;
  bool have_fmt = false;
  Waveform wave;
  while (pos + 8 <= data.size()) {
    const uint8_t* chunk = p + pos;
    uint32_t chunk_size = ReadU32(chunk + 4);
    size_t body = pos + 8;
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (chunk_size < 16 || body + 16 > data.size())
        throw std::runtime_error("truncated fmt chunk: " + path);
      uint16_t format = ReadU16(p + body);
      channels = ReadU16(p + body + 2);
      sample_rate = static_cast<int>(ReadU32(p + body + 4));
      bits = ReadU16(p + body + 14);
      if (format != 1)
        throw std::runtime_error("unsupported wav encoding (PCM required): " + path);
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      if (!have_fmt) throw std::runtime_error("data chunk before fmt: " + path);
      if (channels != 1)
        throw std::runtime_error("mono required, got " + std::to_string(channels) +
                                 " channels: " + path);
      if (bits != 16)
        throw std::runtime_error("16-bit PCM required, got " +
                                 std::to_string(bits) + " bits: " + path);
      if (expected_rate > 0 && sample_rate != expected_rate)
        throw std::runtime_error("sample rate mismatch: file is " +
                                 std::to_string(sample_rate) + " Hz, expected " +
                                 std::to_string(expected_rate) + " Hz: " + path);
      size_t n = std::min<size_t>(chunk_size, data.size() - body) / 2;
      wave.sample_rate = sample_rate;
      wave.samples.resize(n);
      for (size_t i = 0; i < n; ++i) {
        int16_t v = static_cast<int16_t>(ReadU16(p + body + 2 * i));
        wave.samples[i] = static_cast<float>(v) / 32768.0f;
      }
      return wave;
    }
    pos = body + chunk_size + (chunk_size & 1);
  }
  throw std::runtime_error("no data chunk found: " + path);
}

void WriteWav(const std::string& path, const Waveform& wave) {
  if (wave.samples.empty()) throw std::runtime_error("empty waveform");
  std::string out;
  uint32_t data_bytes = static_cast<uint32_t>(wave.samples.size() * 2);
  out.append("RIFF");
  PutU32(&out, 36 + data_bytes);
  out.append("WAVEfmt ");
  PutU32(&out, 16);
  PutU16(&out, 1);  // PCM
  PutU16(&out, 1);  // mono
  PutU32(&out, static_cast<uint32_t>(wave.sample_rate));
  PutU32(&out, static_cast<uint32_t>(wave.sample_rate * 2));  // byte rate
  PutU16(&out, 2);                                            // block align
  PutU16(&out, 16);
  out.append("data");
  PutU32(&out, data_bytes);
  for (float s : wave.samples) {
    float c = std::clamp(s, -1.0f, 1.0f);
    int v = static_cast<int>(std::lrintf(c * 32767.0f));
    PutU16(&out, static_cast<uint16_t>(static_cast<int16_t>(v)));
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write wav file: " + path);
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) throw std::runtime_error("short write: " + path);
}

}  // namespace promptstyle
