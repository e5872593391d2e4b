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

#include "corpus/generator.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "corpus/manifest.h"

namespace promptstyle {

namespace {

constexpr int kMaxHarmonics = 10;
constexpr double kVibratoRateHz = 5.5;

// Deterministic uniform in [0, 1) from a splitmix64 state.
double NextUniform(uint64_t* state) {
  *state = Splitmix64(*state);
  return static_cast<double>(*state >> 11) * 0x1.0p-53;
}

uint64_t NextInt(uint64_t* state) {
  *state = Splitmix64(*state);
  return *state;
}

// Fixed per-phone harmonic weight table; phone identity is a spectral shape.
const std::vector<std::vector<double>>& PhoneWeights() {
  static const std::vector<std::vector<double>> table = [] {
    std::vector<std::vector<double>> t(kNumPhones);
    for (int p = 0; p < kNumPhones; ++p) {
      uint64_t s = Splitmix64(0x9e3779b97f4a7c15ull + p);
      t[p].resize(kMaxHarmonics);
      for (int k = 0; k < kMaxHarmonics; ++k) {
        t[p][k] = 0.2 + 0.8 * NextUniform(&s);
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

uint64_t Splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

uint64_t MixSeed(uint64_t a, uint64_t b, uint64_t c) {
  return Splitmix64(Splitmix64(Splitmix64(a) ^ b) ^ c);
}

void DrawContent(uint64_t seed, int speaker_id, int index,
                 std::vector<int64_t>* phonemes,
                 std::vector<double>* base_durations) {
  uint64_t s = MixSeed(seed, static_cast<uint64_t>(speaker_id) + 1,
                       static_cast<uint64_t>(index) + 1);
  int length = 6 + static_cast<int>(NextInt(&s) % 7);  // 6..12 phones
  phonemes->resize(length);
  base_durations->resize(length);
  for (int i = 0; i < length; ++i) {
    (*phonemes)[i] = static_cast<int64_t>(NextInt(&s) % kNumPhones);
    (*base_durations)[i] = 0.08 + 0.08 * NextUniform(&s);
  }
}

Waveform RenderUtterance(const StyleSpec& style, const SpeakerSpec& speaker,
                         const std::vector<int64_t>& phonemes,
                         const std::vector<double>& base_durations,
                         uint64_t noise_seed, int sample_rate) {
  if (phonemes.empty() || phonemes.size() != base_durations.size()) {
    throw std::invalid_argument("degenerate phone sequence");
  }
  Waveform wave;
  wave.sample_rate = sample_rate;

  double f0 = style.f0_base + speaker.f0_offset;
  // Spectral tilt grows with formant_scale: higher harmonics fall off faster.
  double rolloff = 0.8 + (speaker.formant_scale - 0.7) / 0.6 * 0.8;
  int ramp = sample_rate / 125;  // 8 ms edge ramps per phone

  uint64_t noise_state = noise_seed;
  double phase = 0.0;
  size_t t_global = 0;
  for (size_t p = 0; p < phonemes.size(); ++p) {
    const auto& w = PhoneWeights()[phonemes[p] % kNumPhones];
    double dur = base_durations[p] / style.rate;
    int n = std::max(1, static_cast<int>(std::lround(dur * sample_rate)));

    std::vector<double> weights(kMaxHarmonics);
    double norm = 0.0;
    for (int k = 0; k < kMaxHarmonics; ++k) {
      double freq = (k + 1) * f0;
      weights[k] = freq < 8000.0 ? w[k] * std::pow(k + 1, -rolloff) : 0.0;
      norm += weights[k];
    }
    for (auto& v : weights) v /= norm;

    for (int i = 0; i < n; ++i, ++t_global) {
      double t = static_cast<double>(t_global) / sample_rate;
      double f = f0 + style.vibrato_depth * std::sin(2.0 * M_PI * kVibratoRateHz * t);
      phase += 2.0 * M_PI * f / sample_rate;
      double sample = 0.0;
      for (int k = 0; k < kMaxHarmonics; ++k) {
        if (weights[k] > 0.0) sample += weights[k] * std::sin((k + 1) * phase);
      }
      double env = 1.0;
      if (i < ramp) env = static_cast<double>(i) / ramp;
      if (n - 1 - i < ramp) env = std::min(env, static_cast<double>(n - 1 - i) / ramp);
      double noise = 2.0 * NextUniform(&noise_state) - 1.0;
      double v = style.energy * (env * sample + 0.01 * noise);
      wave.samples.push_back(static_cast<float>(std::clamp(v, -0.99, 0.99)));
    }
  }
  return wave;
}

std::string GenerateCorpus(const CorpusConfig& config, const std::string& out_dir) {
  if (config.styles.size() < 2 || config.speakers.size() < 2) {
    throw std::invalid_argument("need at least 2 styles and 2 speakers");
  }
  for (const auto& s : config.styles) ValidateStyle(s);
  ValidateSpeakers(config.speakers);

  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(fs::path(out_dir) / "wavs", ec);
  if (ec) throw std::runtime_error("cannot create " + out_dir + ": " + ec.message());

  int annotated = static_cast<int>(
      std::ceil(config.annotated_fraction * config.utts_per_cell));

  std::vector<UtteranceRecord> records;
  for (const auto& style : config.styles) {
    uint64_t style_hash = 0;
    for (char c : style.name) style_hash = Splitmix64(style_hash ^ static_cast<uint8_t>(c));
    auto seen = SeenTemplates(style);
    for (const auto& speaker : config.speakers) {
      for (int i = 0; i < config.utts_per_cell; ++i) {
        std::vector<int64_t> phonemes;
        std::vector<double> base_durs;
        DrawContent(config.seed, speaker.id, i, &phonemes, &base_durs);

        uint64_t noise_seed = MixSeed(config.seed ^ style_hash, speaker.id, i);
        auto wave = RenderUtterance(style, speaker, phonemes, base_durs,
                                    noise_seed, config.sample_rate);

        UtteranceRecord rec;
        rec.utt_id = style.name + "_s" + std::to_string(speaker.id) + "_" +
                     std::to_string(i);
        rec.wav_path = "wavs/" + rec.utt_id + ".wav";
        rec.phonemes = phonemes;
        rec.speaker_id = speaker.id;
        rec.style_name = style.name;
        if (i < annotated) {
          uint64_t ps = MixSeed(config.seed + 77, style_hash, MixSeed(speaker.id, i));
          rec.prompt_text = seen[ps % seen.size()];
        }
        WriteWav((fs::path(out_dir) / rec.wav_path).string(), wave);
        records.push_back(std::move(rec));
      }
    }
  }

  std::string manifest_path = (fs::path(out_dir) / "manifest.jsonl").string();
  SaveManifest(manifest_path, records);
  return manifest_path;
}

}  // namespace promptstyle
