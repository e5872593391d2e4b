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

#ifndef MODEL_PROMPT_ENCODER_H_
#define MODEL_PROMPT_ENCODER_H_

#include <string>
#include <vector>

#include <torch/torch.h>

#include "model/layers.h"

namespace promptstyle {

// Hash-bucket word tokenizer: lowercase, strip punctuation, FNV-1a into a
// fixed vocabulary (0 is padding).
std::vector<int64_t> TokenizePrompt(const std::string& text, int vocab = 4096);

// Miniature contextual text encoder: embeddings + transformer blocks with
// mean pooling into a 768-dim semantic vector. Weights are either loaded from
// an archive or seeded deterministically; the interface stays the same.
class ContextualTextEncoderImpl : public torch::nn::Module {
 public:
  ContextualTextEncoderImpl(int vocab = 4096, int dim = 768, int n_blocks = 4,
                            int heads = 4);

  // Non-empty text -> (dim) semantic vector (unbatched convenience).
  torch::Tensor encode(const std::string& text);
  // Batched: (B, dim).
  torch::Tensor encode_batch(const std::vector<std::string>& texts);

  // Parameters of the final attention block, the only encoder part trained in
  // stage 2.
  std::vector<torch::Tensor> final_block_parameters();
  std::vector<torch::Tensor> frozen_parameters();

  int dim() const { return dim_; }

 private:
  int vocab_, dim_;
  torch::nn::Embedding embedding_{nullptr};
  std::vector<TransformerBlock> blocks_;
};
TORCH_MODULE(ContextualTextEncoder);

// 768 -> 512 -> 256 -> 256 with ReLU between layers.
class AdapterImpl : public torch::nn::Module {
 public:
  AdapterImpl(int in_dim = 768, int out_dim = 256);
  torch::Tensor forward(const torch::Tensor& semantic);

 private:
  int in_dim_;
  torch::nn::Linear fc1_{nullptr}, fc2_{nullptr}, fc3_{nullptr};
};
TORCH_MODULE(Adapter);

// Pre-trained (or seeded) contextual encoder + adapter.
class PromptEncoderImpl : public torch::nn::Module {
 public:
  PromptEncoderImpl(int vocab = 4096, int semantic_dim = 768, int style_dim = 256);

  torch::Tensor encode_semantic(const std::string& text);        // (768)
  torch::Tensor forward(const std::vector<std::string>& texts);  // (B, 256)

  // Optional weights archive for the contextual encoder.
  void load_pretrained(const std::string& path);

  ContextualTextEncoder& bert() { return bert_; }
  Adapter& adapter() { return adapter_; }

 private:
  ContextualTextEncoder bert_{nullptr};
  Adapter adapter_{nullptr};
};
TORCH_MODULE(PromptEncoder);

struct ParameterGroup {
  std::string name;
  std::vector<torch::Tensor> params;
};

// Stage-wise trainable selection: stage 1 excludes the prompt model entirely;
// stage 2 trains the adapter plus the encoder's final attention block.
std::vector<ParameterGroup> TrainableGroups(PromptEncoder& encoder, int stage);

}  // namespace promptstyle

#endif  // MODEL_PROMPT_ENCODER_H_
