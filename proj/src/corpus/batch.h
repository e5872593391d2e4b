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

#ifndef CORPUS_BATCH_H_
#define CORPUS_BATCH_H_

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <torch/torch.h>

#include "corpus/spec.h"
#include "dsp/features.h"

namespace promptstyle {

struct UtteranceFeatures {
  torch::Tensor wave;    // (N)
  torch::Tensor linear;  // (bins, T)
  torch::Tensor mel;     // (80, T)
};

// Loads wavs on demand and caches the derived features per utt_id.
class FeatureProvider {
 public:
  explicit FeatureProvider(FrameSpec spec = {}) : spec_(spec) {}

  const UtteranceFeatures& Get(const UtteranceRecord& rec);
  const FrameSpec& spec() const { return spec_; }

 private:
  FrameSpec spec_;
  std::unordered_map<std::string, UtteranceFeatures> cache_;
};

struct Batch {
  torch::Tensor phonemes;         // (B, Lmax) int64
  torch::Tensor phoneme_lengths;  // (B) int64
  torch::Tensor linear;           // (B, bins, Tmax)
  torch::Tensor mel;              // (B, 80, Tmax)
  torch::Tensor spec_lengths;     // (B) int64
  torch::Tensor wave;             // (B, Smax)
  torch::Tensor speaker_ids;      // (B) int64
  std::vector<std::string> style_names;
  std::vector<std::optional<std::string>> prompts;

  int64_t size() const { return phonemes.size(0); }
};

Batch MakeBatch(const std::vector<UtteranceRecord>& records,
                FeatureProvider& provider);

// (B, 1, max_len) float mask, 1 inside each sequence.
torch::Tensor SequenceMask(const torch::Tensor& lengths, int64_t max_len);

}  // namespace promptstyle

#endif  // CORPUS_BATCH_H_
