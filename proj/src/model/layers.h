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

#ifndef MODEL_LAYERS_H_
#define MODEL_LAYERS_H_

#include <optional>
#include <string>

#include <torch/torch.h>

namespace promptstyle {

// (1, max_len, dim) sinusoidal position table.
torch::Tensor SinusoidalPositions(int64_t max_len, int64_t dim,
                                  const torch::TensorOptions& options = {});

// Post-norm transformer block, no dropout. Input (B, T, C); key padding mask
// (B, T) with 1 = valid.
class TransformerBlockImpl : public torch::nn::Module {
 public:
  TransformerBlockImpl(int dim, int heads, int ffn_mult = 4);
  torch::Tensor forward(const torch::Tensor& x, const torch::Tensor& mask);

 private:
  int heads_;
  torch::nn::Linear qkv_{nullptr}, out_{nullptr}, ffn1_{nullptr}, ffn2_{nullptr};
  torch::nn::LayerNorm norm1_{nullptr}, norm2_{nullptr};
};
TORCH_MODULE(TransformerBlock);

// Projects the style/speaker vectors enabled at one conditioning site into a
// (B, channels, 1) additive bias. Both enabled -> elementwise sum. Supplying a
// vector at a disabled site (or omitting an enabled one) is a wiring error.
class SiteConditionerImpl : public torch::nn::Module {
 public:
  SiteConditionerImpl(std::string site, int channels, bool use_style,
                      bool use_speaker, int style_dim = 256, int speaker_dim = 256);
  // Undefined tensor when the site is fully unconditioned.
  torch::Tensor forward(const std::optional<torch::Tensor>& style,
                        const std::optional<torch::Tensor>& speaker);

  bool use_style() const { return use_style_; }
  bool use_speaker() const { return use_speaker_; }

 private:
  std::string site_;
  bool use_style_, use_speaker_;
  torch::nn::Linear style_proj_{nullptr}, speaker_proj_{nullptr};
};
TORCH_MODULE(SiteConditioner);

}  // namespace promptstyle

#endif  // MODEL_LAYERS_H_
