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

#ifndef MODEL_TEXT_ENCODER_H_
#define MODEL_TEXT_ENCODER_H_

#include <torch/torch.h>

#include "model/layers.h"

namespace promptstyle {

struct PriorStats {
  torch::Tensor hidden;   // (B, hidden, L)
  torch::Tensor mean;     // (B, latent, L)
  torch::Tensor log_std;  // (B, latent, L)
};

// Transformer phoneme encoder + prior projection. Deliberately takes no style
// or speaker input.
class TextEncoderImpl : public torch::nn::Module {
 public:
  TextEncoderImpl(int vocab, int hidden, int latent, int n_layers = 4,
                  int heads = 2);

  // phonemes (B, L) int64, lengths (B) int64.
  PriorStats forward(const torch::Tensor& phonemes, const torch::Tensor& lengths);

 private:
  int vocab_, hidden_;
  torch::nn::Embedding embedding_{nullptr};
  std::vector<TransformerBlock> blocks_;
  torch::nn::Conv1d proj_{nullptr};
};
TORCH_MODULE(TextEncoder);

}  // namespace promptstyle

#endif  // MODEL_TEXT_ENCODER_H_
