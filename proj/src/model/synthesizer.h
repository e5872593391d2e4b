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

#ifndef MODEL_SYNTHESIZER_H_
#define MODEL_SYNTHESIZER_H_

#include <optional>
#include <string>
#include <vector>

#include <torch/torch.h>

#include "dsp/features.h"
#include "model/conditioning.h"
#include "model/decoder.h"
#include "model/duration_predictor.h"
#include "model/flow.h"
#include "model/posterior_encoder.h"
#include "model/style_encoder.h"
#include "model/text_encoder.h"

namespace promptstyle {

struct ModelConfig {
  int phoneme_vocab = 16;
  int hidden = 96;
  int latent = 96;
  int style_dim = 256;
  int speaker_dim = 256;
  int n_speakers = 4;
  int text_layers = 4;
  int text_heads = 2;
  int flow_blocks = 2;
  std::vector<int> upsample = {10, 30};
  std::vector<int> periods = {2, 3, 5};
  int segment_frames = 32;
  double noise_scale = 0.667;
  double duration_noise_scale = 0.8;
  double grl_lambda = 1.0;
  std::string preset = "PROMPTSTYLE";
  ConditioningConfig cond = ApplyPreset("PROMPTSTYLE");
  FrameSpec frame;
};

struct SynthesisResult {
  torch::Tensor wave;       // (samples)
  torch::Tensor durations;  // (L) int64
};

// The conditioned VITS-style backbone with per-site routing. Style vectors
// come from the reference encoder (stage 1) or the prompt encoder (inference
// by text description); both live in the same 256-dim space.
class PromptStyleModelImpl : public torch::nn::Module {
 public:
  explicit PromptStyleModelImpl(ModelConfig config);

  const ModelConfig& config() const { return config_; }

  // Routed sub-model calls; style/speaker are the full vectors, and each site
  // receives only what its switches enable.
  PriorStats EncodeText(const torch::Tensor& phonemes,
                        const torch::Tensor& lengths);
  LatentSequence EncodePosterior(const torch::Tensor& linear,
                                 const torch::Tensor& mask,
                                 const torch::Tensor& style,
                                 const torch::Tensor& speaker,
                                 bool deterministic = false);
  torch::Tensor FlowForward(const torch::Tensor& z, const torch::Tensor& mask,
                            const torch::Tensor& style,
                            const torch::Tensor& speaker);
  torch::Tensor FlowInverse(const torch::Tensor& z_p, const torch::Tensor& mask,
                            const torch::Tensor& style,
                            const torch::Tensor& speaker);
  torch::Tensor Decode(const torch::Tensor& z, const torch::Tensor& style,
                       const torch::Tensor& speaker);
  torch::Tensor SdpLoss(const torch::Tensor& hidden, const torch::Tensor& mask,
                        const torch::Tensor& durations, const torch::Tensor& style,
                        const torch::Tensor& speaker);
  torch::Tensor SdpSample(const torch::Tensor& hidden, const torch::Tensor& mask,
                          const torch::Tensor& style, const torch::Tensor& speaker,
                          double noise_scale);

  torch::Tensor SpeakerEmbedding(const torch::Tensor& speaker_ids);

  // Full inference path; style_vector is 256-dim from either encoder.
  SynthesisResult Synthesize(const std::vector<int64_t>& phonemes,
                             int speaker_id, const torch::Tensor& style_vector,
                             double noise_scale, double duration_noise_scale);

  TextEncoder text_encoder{nullptr};
  PosteriorEncoder posterior_encoder{nullptr};
  ConditionedFlow flow{nullptr};
  StochasticDurationPredictor sdp{nullptr};
  Decoder decoder{nullptr};
  ReferenceEncoder reference_encoder{nullptr};
  SpeakerClassifier speaker_classifier{nullptr};
  torch::nn::Embedding speaker_table{nullptr};

 private:
  ModelConfig config_;
};
TORCH_MODULE(PromptStyleModel);

// Expand per-phoneme sequences to frames by integer durations.
// x (B, C, L), durations (B, L) int64 -> (B, C, sum-max) padded; lengths out.
torch::Tensor ExpandByDurations(const torch::Tensor& x,
                                const torch::Tensor& durations);

}  // namespace promptstyle

#endif  // MODEL_SYNTHESIZER_H_
