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

#ifndef CORPUS_GENERATOR_H_
#define CORPUS_GENERATOR_H_

#include <cstdint>
#include <string>
#include <vector>

#include "corpus/spec.h"
#include "dsp/wav.h"

namespace promptstyle {

struct CorpusConfig {
  std::vector<StyleSpec> styles = DefaultStyles();
  std::vector<SpeakerSpec> speakers = DefaultSpeakers();
  int utts_per_cell = 24;
  double annotated_fraction = 0.5;
  uint64_t seed = 1234;
  int sample_rate = 24000;
};

// Pseudo-speech rendering of one phone sequence: harmonic-plus-noise segments
// with per-phone spectral envelopes, vibrato pitch, and style-scaled tempo.
// The phone sequence and base durations come from a content stream keyed by
// (seed, speaker, index) only, so cells across styles share linguistic content.
Waveform RenderUtterance(const StyleSpec& style, const SpeakerSpec& speaker,
                         const std::vector<int64_t>& phonemes,
                         const std::vector<double>& base_durations,
                         uint64_t noise_seed, int sample_rate = 24000);

// Deterministic content draw for cell item (speaker, index).
void DrawContent(uint64_t seed, int speaker_id, int index,
                 std::vector<int64_t>* phonemes,
                 std::vector<double>* base_durations);

// Writes out_dir/wavs/*.wav and out_dir/manifest.jsonl; returns the manifest
// path. Byte-identical output under a fixed (config, seed).
std::string GenerateCorpus(const CorpusConfig& config, const std::string& out_dir);

uint64_t Splitmix64(uint64_t x);
uint64_t MixSeed(uint64_t a, uint64_t b, uint64_t c = 0);

}  // namespace promptstyle

#endif  // CORPUS_GENERATOR_H_
