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

#ifndef MODEL_POSTERIOR_ENCODER_H_
#define MODEL_POSTERIOR_ENCODER_H_

#include <optional>

#include <torch/torch.h>

#include "model/layers.h"

namespace promptstyle {

struct LatentSequence {
  torch::Tensor z;            // (B, latent, T)
  torch::Tensor post_mean;    // same shape
  torch::Tensor post_log_std;
};

// Gated dilated conv stack over the linear spectrogram; global conditioning
// enters every layer as an additive pre-activation bias.
class PosteriorEncoderImpl : public torch::nn::Module {
 public:
  PosteriorEncoderImpl(int in_bins, int hidden, int latent, bool cond_style,
                       bool cond_speaker, int n_layers = 4, int style_dim = 256,
                       int speaker_dim = 256);

  // linear (B, bins, T); mask (B, 1, T). deterministic -> z = post_mean.
  LatentSequence forward(const torch::Tensor& linear, const torch::Tensor& mask,
                         const std::optional<torch::Tensor>& style,
                         const std::optional<torch::Tensor>& speaker,
                         bool deterministic = false);

 private:
  torch::nn::Conv1d pre_{nullptr}, post_{nullptr};
  std::vector<torch::nn::Conv1d> convs_;
  std::vector<SiteConditioner> conds_;
};
TORCH_MODULE(PosteriorEncoder);

}  // namespace promptstyle

#endif  // MODEL_POSTERIOR_ENCODER_H_
