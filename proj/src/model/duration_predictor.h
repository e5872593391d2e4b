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

#ifndef MODEL_DURATION_PREDICTOR_H_
#define MODEL_DURATION_PREDICTOR_H_

#include <optional>

#include <torch/torch.h>

#include "model/layers.h"

namespace promptstyle {

// Flow-based model of per-phoneme log-durations: a stack of text-conditioned
// elementwise affine layers interleaved with learnable x + a*tanh(x)
// nonlinearities, trained with uniform dequantization so the loss bounds the
// discrete duration log-likelihood. Text input is detached; global
// conditioning follows the configured switches (style only, in every preset).
class StochasticDurationPredictorImpl : public torch::nn::Module {
 public:
  StochasticDurationPredictorImpl(int hidden, bool cond_style, bool cond_speaker,
                                  int n_flows = 2, int style_dim = 256,
                                  int speaker_dim = 256);

  // Variational duration NLL, masked mean per phoneme. durations (B, L) int64,
  // each >= 1 inside the mask.
  torch::Tensor loss(const torch::Tensor& hidden, const torch::Tensor& mask,
                     const torch::Tensor& durations,
                     const std::optional<torch::Tensor>& style,
                     const std::optional<torch::Tensor>& speaker);

  // Sampled integer durations >= 1 (ceiling of exp(log-duration)).
  torch::Tensor sample(const torch::Tensor& hidden, const torch::Tensor& mask,
                       const std::optional<torch::Tensor>& style,
                       const std::optional<torch::Tensor>& speaker,
                       double noise_scale = 0.8);

 private:
  // (B, 2, L) per-layer affine params from conditioned text features.
  std::vector<torch::Tensor> LayerParams(const torch::Tensor& hidden,
                                         const torch::Tensor& mask,
                                         const std::optional<torch::Tensor>& style,
                                         const std::optional<torch::Tensor>& speaker);

  int n_flows_;
  torch::nn::Conv1d in_proj_{nullptr};
  SiteConditioner cond_{nullptr};
  std::vector<torch::nn::Sequential> param_nets_;
  std::vector<torch::Tensor> warp_raw_;  // softplus -> tanh-warp gain per layer
};
TORCH_MODULE(StochasticDurationPredictor);

}  // namespace promptstyle

#endif  // MODEL_DURATION_PREDICTOR_H_
