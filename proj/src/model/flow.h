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

#ifndef MODEL_FLOW_H_
#define MODEL_FLOW_H_

#include <optional>

#include <torch/torch.h>

#include "model/layers.h"

namespace promptstyle {

// Additive coupling on the channel split with a channel flip in between; no
// scale term, so the transform is volume-preserving (log-det identically 0)
// and exactly invertible. Globally conditioned through a broadcast bias.
class AdditiveCouplingImpl : public torch::nn::Module {
 public:
  AdditiveCouplingImpl(int channels, int hidden, bool cond_style,
                       bool cond_speaker, int style_dim = 256,
                       int speaker_dim = 256);

  torch::Tensor forward(const torch::Tensor& x, const torch::Tensor& mask,
                        const std::optional<torch::Tensor>& style,
                        const std::optional<torch::Tensor>& speaker,
                        bool reverse);

 private:
  torch::Tensor Shift(const torch::Tensor& x0, const torch::Tensor& mask,
                      const std::optional<torch::Tensor>& style,
                      const std::optional<torch::Tensor>& speaker);

  int half_;
  torch::nn::Conv1d pre_{nullptr}, mid_{nullptr}, post_{nullptr};
  SiteConditioner cond_{nullptr};
};
TORCH_MODULE(AdditiveCoupling);

class ConditionedFlowImpl : public torch::nn::Module {
 public:
  ConditionedFlowImpl(int channels, int hidden, int n_blocks, bool cond_speaker,
                      int style_dim = 256, int speaker_dim = 256);

  // Style is mandatory (every preset wires it); speaker per configuration.
  torch::Tensor forward(const torch::Tensor& z, const torch::Tensor& mask,
                        const std::optional<torch::Tensor>& style,
                        const std::optional<torch::Tensor>& speaker);
  torch::Tensor inverse(const torch::Tensor& z_p, const torch::Tensor& mask,
                        const std::optional<torch::Tensor>& style,
                        const std::optional<torch::Tensor>& speaker);

  // Volume-preserving by construction.
  double log_det() const { return 0.0; }

 private:
  torch::Tensor Run(const torch::Tensor& x, const torch::Tensor& mask,
                    const std::optional<torch::Tensor>& style,
                    const std::optional<torch::Tensor>& speaker, bool reverse);

  std::vector<AdditiveCoupling> layers_;
};
TORCH_MODULE(ConditionedFlow);

}  // namespace promptstyle

#endif  // MODEL_FLOW_H_
