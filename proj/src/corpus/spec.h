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

#ifndef CORPUS_SPEC_H_
#define CORPUS_SPEC_H_

#include <optional>
#include <string>
#include <vector>

namespace promptstyle {

constexpr int kNumPhones = 16;

struct StyleSpec {
  std::string name;
  double f0_base = 180.0;      // Hz, in [60, 500]
  double rate = 1.0;           // speed multiplier, in [0.5, 2.0]
  double energy = 0.6;         // amplitude scale, in (0, 1]
  double vibrato_depth = 2.0;  // Hz
  std::vector<std::string> prompt_templates;  // last entry is held out
};

struct SpeakerSpec {
  int id = 0;
  double f0_offset = 0.0;      // Hz, timbre proxy
  double formant_scale = 1.0;  // in [0.7, 1.3], spectral tilt proxy
};

struct UtteranceRecord {
  std::string utt_id;
  std::string wav_path;
  std::vector<int64_t> phonemes;
  int speaker_id = 0;
  std::string style_name;
  std::optional<std::string> prompt_text;
};

// 4 styles x 4 speakers desk-scale defaults. Style f0 bases are spaced wider
// than the speaker offsets so style remains the dominant acoustic factor, and
// the calm/fast pair carries the 2.0 rate ratio used by the transfer checks.
std::vector<StyleSpec> DefaultStyles();
std::vector<SpeakerSpec> DefaultSpeakers();

void ValidateStyle(const StyleSpec& style);
void ValidateSpeakers(const std::vector<SpeakerSpec>& speakers);

// Seen templates are all but the last; the last one is reserved for
// unseen-prompt evaluation.
std::vector<std::string> SeenTemplates(const StyleSpec& style);
const std::string& HeldOutTemplate(const StyleSpec& style);

}  // namespace promptstyle

#endif  // CORPUS_SPEC_H_
