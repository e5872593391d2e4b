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

#ifndef MODEL_DECODER_H_
#define MODEL_DECODER_H_

#include <optional>
#include <vector>

#include <torch/torch.h>

#include "model/layers.h"

namespace promptstyle {

// Upsampling waveform generator: latent frames in, hop x frames samples out
// (upsample factors 10 x 30 = hop 300). Output through tanh.
class DecoderImpl : public torch::nn::Module {
 public:
  DecoderImpl(int latent, bool cond_style, bool cond_speaker,
              std::vector<int> upsample = {10, 30}, int base_channels = 128,
              int style_dim = 256, int speaker_dim = 256);

  // z (B, latent, T) -> (B, hop*T)
  torch::Tensor forward(const torch::Tensor& z,
                        const std::optional<torch::Tensor>& style,
                        const std::optional<torch::Tensor>& speaker);

  int hop() const { return hop_; }

 private:
  int hop_;
  torch::nn::Conv1d pre_{nullptr}, post_{nullptr};
  SiteConditioner cond_{nullptr};
  std::vector<torch::nn::ConvTranspose1d> ups_;
  std::vector<torch::nn::Conv1d> res1_, res2_;
};
TORCH_MODULE(Decoder);

// Multi-period discriminator, periods {2, 3, 5} at desk scale.
struct DiscriminatorOutput {
  std::vector<torch::Tensor> logits;                 // one per period
  std::vector<std::vector<torch::Tensor>> features;  // intermediate maps
};

class MultiPeriodDiscriminatorImpl : public torch::nn::Module {
 public:
  explicit MultiPeriodDiscriminatorImpl(std::vector<int> periods = {2, 3, 5});

  // wave (B, S)
  DiscriminatorOutput forward(const torch::Tensor& wave);

  int64_t num_discriminators() const { return periods_.size(); }

 private:
  std::vector<int> periods_;
  std::vector<torch::nn::ModuleList> stacks_;
};
TORCH_MODULE(MultiPeriodDiscriminator);

}  // namespace promptstyle

#endif  // MODEL_DECODER_H_
