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

#include "corpus/spec.h"

#include <set>
#include <stdexcept>

namespace promptstyle {

std::vector<StyleSpec> DefaultStyles() {
  return {
      {"calm", 140.0, 0.7, 0.50, 2.0,
       {"a slow calm low voice",
        "speaking slowly and calmly",
        "calm relaxed and slow speech",
        "a soothing slow gentle tone",
        "low gentle and calm delivery",
        "an unhurried calm speaking style",
        "a very calm and slow voice"}},
      {"deep", 100.0, 1.0, 0.80, 1.5,
       {"a deep low-pitched voice",
        "deep and resonant speech",
        "a strong deep low tone",
        "speaking with a deep heavy voice",
        "low deep and powerful delivery",
        "a booming deep speaking style",
        "a really deep and low voice"}},
      {"bright", 220.0, 1.0, 0.70, 3.0,
       {"a bright high-pitched voice",
        "high bright and clear speech",
        "a cheerful bright high tone",
        "speaking with a bright light voice",
        "high clear and bright delivery",
        "a sparkling bright speaking style",
        "a very bright and high voice"}},
      {"fast", 180.0, 1.4, 0.60, 2.0,
       {"a fast energetic voice",
        "quick and fast speech",
        "a rapid fast lively tone",
        "speaking with a fast hurried voice",
        "quick lively and fast delivery",
        "a rushing fast speaking style",
        "a really fast and quick voice"}},
  };
}

std::vector<SpeakerSpec> DefaultSpeakers() {
  return {
      {0, -12.0, 0.85},
      {1, -4.0, 0.95},
      {2, 4.0, 1.05},
      {3, 12.0, 1.15},
  };
}

void ValidateStyle(const StyleSpec& style) {
  if (style.name.empty()) throw std::invalid_argument("style name empty");
  if (style.f0_base < 60.0 || style.f0_base > 500.0)
    throw std::invalid_argument("style " + style.name + ": f0_base out of [60, 500]");
  if (style.rate < 0.5 || style.rate > 2.0)
    throw std::invalid_argument("style " + style.name + ": rate out of [0.5, 2.0]");
  if (style.energy <= 0.0 || style.energy > 1.0)
    throw std::invalid_argument("style " + style.name + ": energy out of (0, 1]");
  if (style.prompt_templates.empty())
    throw std::invalid_argument("style " + style.name + ": no prompt templates");
}

void ValidateSpeakers(const std::vector<SpeakerSpec>& speakers) {
  std::set<int> ids;
  for (const auto& spk : speakers) {
    if (spk.id < 0) throw std::invalid_argument("negative speaker id");
    if (!ids.insert(spk.id).second)
      throw std::invalid_argument("duplicate speaker id " + std::to_string(spk.id));
    if (spk.formant_scale < 0.7 || spk.formant_scale > 1.3)
      throw std::invalid_argument("speaker " + std::to_string(spk.id) +
                                  ": formant_scale out of [0.7, 1.3]");
  }
}

std::vector<std::string> SeenTemplates(const StyleSpec& style) {
  if (style.prompt_templates.size() < 2) return style.prompt_templates;
  return {style.prompt_templates.begin(), style.prompt_templates.end() - 1};
}

const std::string& HeldOutTemplate(const StyleSpec& style) {
  return style.prompt_templates.back();
}

}  // namespace promptstyle
